from .instance import ChainConfig, ChainInstance, FactorizationStrategy, ReplacementMode
from .oracles import cat_oracle, domination_oracle, weak_section_oracle
from .sampler import ChainSampler, Thickening

__all__ = [
    "ChainConfig",
    "ChainInstance",
    "ChainSampler",
    "FactorizationStrategy",
    "ReplacementMode",
    "Thickening",
    "cat_oracle",
    "domination_oracle",
    "weak_section_oracle",
]
