import random
from typing import Callable, List, Tuple

import pytest

from chaincat import ChainConfig, ChainInstance, ChainSampler, FactorizationStrategy, ReplacementMode
from chains import ChainMap, Complex
from ls_engine import LSEngine


@pytest.fixture
def instance() -> ChainInstance:
    return ChainInstance()


@pytest.fixture
def detour_instance() -> ChainInstance:
    return ChainInstance(
        ChainConfig(f_strategy=FactorizationStrategy.DETOUR, c_strategy=FactorizationStrategy.DETOUR)
    )


@pytest.fixture
def generic_instance() -> ChainInstance:
    return ChainInstance(ChainConfig(replacement_mode=ReplacementMode.GENERIC))


@pytest.fixture
def engine(instance) -> LSEngine:
    return LSEngine(instance)


@pytest.fixture
def sampler() -> ChainSampler:
    return ChainSampler()


@pytest.fixture
def complexes(sampler) -> Callable[[int, int], List[Complex]]:
    """Seeded random complexes: ``complexes(count, seed)``."""

    def draw(count: int, seed: int = 0) -> List[Complex]:
        rng = random.Random(seed)
        return [sampler.sample_object(rng) for _ in range(count)]

    return draw


@pytest.fixture
def maps(sampler) -> Callable[[int, int], List[ChainMap]]:
    """Seeded random chain maps between random complexes: ``maps(count, seed)``."""

    def draw(count: int, seed: int = 0) -> List[ChainMap]:
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            source, target = sampler.sample_object(rng), sampler.sample_object(rng)
            out.append(sampler.sample_map(rng, source, target))
        return out

    return draw


@pytest.fixture
def cospans(sampler) -> Callable[[int, int], List[Tuple[ChainMap, ChainMap]]]:
    """Seeded pairs of maps into a common random target."""

    def draw(count: int, seed: int = 0) -> List[Tuple[ChainMap, ChainMap]]:
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            b = sampler.sample_object(rng)
            a, c = sampler.sample_object(rng), sampler.sample_object(rng)
            out.append((sampler.sample_map(rng, a, b), sampler.sample_map(rng, c, b)))
        return out

    return draw
