# Descent Census - Services Package
from census.services import poly_service, binomial_service, series_service, family_service
from census.services import oracle_service, chromatic_service, table_service, identity_service

__all__ = ['poly_service', 'binomial_service', 'series_service', 'family_service', 'oracle_service', 'chromatic_service', 'table_service', 'identity_service']
