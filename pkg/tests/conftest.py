"""Two unit masses coupled by a unit spring, each tied to ground by a unit spring.

The matrices below are typed in by hand; they are the fixtures every golden
test compares against.
"""

from pathlib import Path

import pytest

from behaviorctl.behavior import make_behavior
from behaviorctl.network import Edge, Network, Subsystem
from behaviorctl.polymat import XI as x

ROOT = Path(__file__).resolve().parent.parent
MODEL_FILE = ROOT / "models" / "mass_spring.bhv"


def plant1():
    return make_behavior(
        [("w1", 2), ("s12", 2), ("c1", 2)],
        [[x**2 + 2, -1, 0, -1, 0, -1], [-1, 0, 1, 0, 0, 0], [-1, 0, 0, 0, 1, 0]],
    )


def plant2():
    return make_behavior(
        [("w2", 2), ("s12", 2), ("c2", 2)],
        [[x**2 + 2, -1, -1, 0, 0, -1], [-1, 0, 0, 1, 0, 0], [-1, 0, 0, 0, 1, 0]],
    )


def desired1(coupling=2):
    return make_behavior(
        [("w1", 2), ("k12", 2)],
        [[2 * x**2 + x + 1 + coupling, -1, 0, -coupling], [-1, 0, 1, 0]],
    )


def desired2(coupling=2):
    return make_behavior(
        [("w2", 2), ("k12", 2)],
        [[2 * x**2 + x + 1 + coupling, -1, -coupling, 0], [-1, 0, 0, 1]],
    )


def controller1_expected():
    return make_behavior(
        [("c1", 2), ("s12", 2), ("k12", 2)],
        [[x**2 + x + 1, 1, 0, 1, 0, -2], [0, 0, -1, 0, 1, 0], [1, 0, -1, 0, 0, 0]],
    )


def controller2_expected():
    return make_behavior(
        [("c2", 2), ("s12", 2), ("k12", 2)],
        [[x**2 + x + 1, 1, 1, 0, -2, 0], [0, 0, 0, -1, 0, 1], [1, 0, 0, -1, 0, 0]],
    )


def mass_spring(coupling=2) -> Network:
    return Network(
        [Subsystem(plant1(), desired1(coupling)), Subsystem(plant2(), desired2(coupling))],
        [Edge(1, 2, 2, 2)],
    )


@pytest.fixture
def P1():
    return plant1()


@pytest.fixture
def P2():
    return plant2()


@pytest.fixture
def K1():
    return desired1()


@pytest.fixture
def K2():
    return desired2()


@pytest.fixture
def net():
    return mass_spring()


@pytest.fixture
def model_path():
    return MODEL_FILE


def decoupled_pair(net: Network, drop_s: bool = False):
    """Local canonical controllers with ``k12`` replaced by ``s12``.

    With ``drop_s`` the shared ``s12`` is projected out as well, leaving two
    controllers that act on their own ``c_i`` only.
    """
    from behaviorctl.behavior import eliminate, identify, interconnect
    from behaviorctl.synthesis import local_canonical

    parts = []
    for i, sub in enumerate(net.subsystems, start=1):
        C = identify(local_canonical(sub.plant, sub.desired), "s12", "k12")
        parts.append(eliminate(C, [f"c{i}"]) if drop_s else C)
    return interconnect(*parts)


def random_pair_network(seed: int, max_dim: int = 3, max_deg: int = 2) -> Network:
    """Two subsystems joined by one edge; every group dimension in 1..max_dim."""
    import random

    from behaviorctl.oracle import random_behavior

    rng = random.Random(seed)
    d = {n: rng.randint(1, max_dim) for n in ("w1", "w2", "c1", "c2", "s", "k")}
    P1 = random_behavior([("w1", d["w1"]), ("s12", d["s"]), ("c1", d["c1"])],
                         d["w1"] + d["s"] + d["c1"], max_deg=max_deg, rng=rng)
    P2 = random_behavior([("w2", d["w2"]), ("s12", d["s"]), ("c2", d["c2"])],
                         d["w2"] + d["s"] + d["c2"], max_deg=max_deg, rng=rng)
    K1 = random_behavior([("w1", d["w1"]), ("k12", d["k"])], d["w1"] + d["k"], max_deg=max_deg, rng=rng)
    K2 = random_behavior([("w2", d["w2"]), ("k12", d["k"])], d["w2"] + d["k"], max_deg=max_deg, rng=rng)
    return Network([Subsystem(P1, K1), Subsystem(P2, K2)], [Edge(1, 2, d["s"], d["k"])])


def implementable_pair_network(seed: int, max_deg: int = 1) -> Network:
    """Two random plants whose desired behaviors come from closing each loop
    with a random local controller on ``c_i``, so the network is implementable
    by construction."""
    import random

    from behaviorctl.behavior import eliminate, interconnect, rename
    from behaviorctl.oracle import random_behavior

    rng = random.Random(seed)
    subs = []
    for i in (1, 2):
        P = random_behavior([(f"w{i}", 1), ("s12", 1), (f"c{i}", 1)], 2, max_deg=max_deg, rng=rng)
        C = random_behavior([(f"c{i}", 1)], 1, max_deg=max_deg, rng=rng)
        K = rename(eliminate(interconnect(P, C), [f"w{i}", "s12"]), {"s12": "k12"})
        subs.append(Subsystem(P, K))
    return Network(subs, [Edge(1, 2, 1, 1)])
