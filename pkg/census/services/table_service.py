"""
Descent Census - Table Service
Lays family polynomials out as printed tables: one row per statistic
value, one column per n, TOTAL last
"""
from census.config import settings
from census.models import FamilyTable, TableRow
from census.services import family_service
from census.services.poly_service import exponent_histogram, substitute

# CLI name -> (family tag, variables the polynomials live in)
TABLE_FAMILIES = {
    "strong-tournaments": ("strong_tournament", ["u"]),
    "strong-digraphs": ("strong_digraph", ["u", "y"]),
    "acyclic": ("acyclic", ["u", "y"]),
    "eta": ("eta", ["u", "y"]),
    "trees": ("tree", ["u"]),
    "forests": ("forest", ["u", "z"]),
}
STATISTIC_NAMES = {"u": "d", "y": "e", "z": "k"}
SPECIALIZATIONS = {"none": [], "u1": ["u"], "y1": ["y"], "uy": ["u", "y"]}


def parse_n_range(text: str) -> list[int]:
    """'5' or '4..7'"""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise ValueError(f"Bad n range {text!r}; use N or A..B") from None
    if low > high:
        raise ValueError(f"Empty n range {text!r}")
    return list(range(low, high + 1))


def build_family_table(name: str, n_values: list[int], specialization: str = "none") -> FamilyTable:
    if name not in TABLE_FAMILIES:
        raise ValueError(f"Unknown table family {name!r}. Known: {', '.join(TABLE_FAMILIES)}")
    if specialization not in SPECIALIZATIONS:
        raise ValueError(f"Unknown specialization {specialization!r}")
    lowest = 0 if name == "acyclic" else 1
    for n in n_values:
        if not lowest <= n <= settings.table_nmax:
            raise ValueError(f"n={n} outside {lowest}..{settings.table_nmax} for {name}")

    family, variables = TABLE_FAMILIES[name]
    fixed = [v for v in SPECIALIZATIONS[specialization] if v in variables]
    remaining = [v for v in variables if v not in fixed]

    columns = []
    for n in n_values:
        value = family_service.family_polynomial(family, n).value
        columns.append(exponent_histogram(substitute(value, {v: 1 for v in fixed}), remaining))

    keys = sorted(set().union(*columns)) if columns else []
    if len(remaining) == 1 and keys:
        keys = [(d,) for d in range(keys[0][0], keys[-1][0] + 1)]

    rows = []
    if remaining:
        for key in keys:
            rows.append(TableRow(
                label="/".join(str(e) for e in key),
                values=[column.get(key, 0) for column in columns],
            ))
    return FamilyTable(
        family=name,
        row_header="/".join(STATISTIC_NAMES[v] for v in remaining) or "-",
        n_values=list(n_values),
        rows=rows,
        totals=[sum(column.values()) for column in columns],
    )
