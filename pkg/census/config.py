"""
Descent Census - Configuration
"""
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Memo bounds
    nmax: int = 12  # binomial tables (B(n,i), Gaussian binomials, F(n))
    family_nmax: int = 10  # family polynomials
    table_nmax: int = 14  # largest n accepted by `census table`

    # Oracle workers
    threads: int = 1
    chunk_bits: int = 16  # log2 of the vectorized batch size

    # Oracle refusal bounds
    tournament_limit: int = 7
    digraph_limit: int = 5
    digraph_long_limit: int = 6
    tree_limit: int = 7
    orientation_limit: int = 6
    interpolate_limit: int = 5
    coloring_budget: int = 10**7

    # Largest order accepted by `census series`
    series_order_limit: int = 8

    class Config:
        env_prefix = "CENSUS_"
        env_file = ".env"
        env_file_encoding = "utf-8"


settings = Settings()
