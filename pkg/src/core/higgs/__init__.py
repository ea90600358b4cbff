"""
Higgs 场纤维代数
"""

from .pointwise import (
    CenterElement,
    HiggsElement,
    center_generator,
    holomorphic_part,
    toledo_density,
    energy_density,
    cross_pairings,
    random_higgs,
    milnor_wood_bound,
    milnor_wood_bound_for,
    verify_higgs_identities,
    verify_milnor_wood_arithmetic,
)

__all__ = [
    'CenterElement',
    'HiggsElement',
    'center_generator',
    'holomorphic_part',
    'toledo_density',
    'energy_density',
    'cross_pairings',
    'random_higgs',
    'milnor_wood_bound',
    'milnor_wood_bound_for',
    'verify_higgs_identities',
    'verify_milnor_wood_arithmetic',
]
