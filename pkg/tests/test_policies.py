import pytest
from hypothesis import given, settings

from games import (
    GameSpec,
    GameState,
    Player,
    Role,
    StrategyPolicy,
    exact_policy,
    mct_spec,
    policy_alice_deletion,
    policy_bob_attack,
    policy_breaker_pairing,
    random_policy,
    simulate,
    solve,
    verify_policy,
)
from graphs import Graph, make_complete, make_cycle, make_cylinder, make_grid, make_path, make_torus
from graphs.bits import bit
from graphs.errors import DomainError, PolicyFaultError
from invariants import DeletionWitness, a1_by_alpha, min_deletion_witness

from .strategies import small_tf_graphs


class Stubborn:
    """Always asks for vertex 0."""

    name = "stubborn"

    def pick(self, spec: GameSpec, state: GameState) -> int:
        return 0


@pytest.mark.parametrize("start", list(Player))
def test_pairing_on_c3_p2(start: Player) -> None:
    spec = mct_spec(make_cylinder(3, 2), 2, 1, start)
    assert verify_policy(spec, policy_breaker_pairing(spec), Role.breaker)


def test_pairing_on_k2_as_second_player() -> None:
    spec = mct_spec(make_complete(2), 1, 1, Player.bob)
    assert verify_policy(spec, policy_breaker_pairing(spec), Role.breaker)


def test_pairing_on_c3_c4_bob_start() -> None:
    spec = mct_spec(make_torus(3, 4), 3, 1, Player.bob)
    assert verify_policy(spec, policy_breaker_pairing(spec), Role.breaker)


def test_pairing_preconditions() -> None:
    with pytest.raises(DomainError, match="one-vertex"):
        policy_breaker_pairing(mct_spec(make_path(1), 1, 1, Player.alice))
    with pytest.raises(DomainError, match="breaker_per_turn"):
        policy_breaker_pairing(mct_spec(make_torus(3, 4), 2, 1, Player.bob))


def test_deletion_on_p3_p3() -> None:
    g = make_grid(3, 3)
    witness = min_deletion_witness(g)
    assert witness.t == 2
    spec = mct_spec(g, 2, 1, Player.alice)
    assert verify_policy(spec, policy_alice_deletion(g, witness), Role.breaker)
    assert simulate(spec, exact_policy(), policy_alice_deletion(g, witness)).outcome.winner is Role.breaker


def test_deletion_answers_bob_on_k2() -> None:
    g = make_complete(2)
    policy = policy_alice_deletion(g, DeletionWitness(x=0, t=1))
    spec = mct_spec(g, 1, 1, Player.bob)
    assert policy.pick(spec, GameState(maker_set=bit(0))) == 1


def test_deletion_on_c6_against_random_bob() -> None:
    g = make_cycle(6)
    witness = min_deletion_witness(g)
    spec = mct_spec(g, 2, 1, Player.alice)
    alice = policy_alice_deletion(g, witness)
    for seed in range(300):
        assert simulate(spec, random_policy(seed), alice).outcome.winner is Role.breaker


def test_deletion_preconditions() -> None:
    with pytest.raises(DomainError, match="not a deletion witness"):
        policy_alice_deletion(make_cycle(4), DeletionWitness(x=0, t=1))
    with pytest.raises(DomainError, match="triangle"):
        policy_alice_deletion(make_cycle(3), DeletionWitness(x=0, t=2))


def test_deletion_guarantee_needs_enough_picks() -> None:
    g = make_grid(2, 6)
    alice = policy_alice_deletion(g, min_deletion_witness(g))
    assert not alice.guarantees(mct_spec(g, 2, 1, Player.alice))
    assert alice.guarantees(mct_spec(g, 3, 1, Player.alice))


def test_attack_on_c4_wins() -> None:
    spec = mct_spec(make_cycle(4), 1, 1, Player.alice)
    assert verify_policy(spec, policy_bob_attack(make_cycle(4)), Role.maker)


def test_attack_on_k2_loses() -> None:
    spec = mct_spec(make_complete(2), 1, 1, Player.alice)
    attack = policy_bob_attack(make_complete(2))
    assert not verify_policy(spec, attack, Role.maker)
    assert simulate(spec, attack, exact_policy()).outcome.winner is Role.breaker


def test_attack_beats_deletion_below_threshold() -> None:
    g = make_grid(2, 6)
    spec = mct_spec(g, 2, 1, Player.alice)
    played = simulate(spec, policy_bob_attack(g), policy_alice_deletion(g, min_deletion_witness(g)))
    assert played.outcome.winner is Role.maker
    assert played.transcript[-1].player is Player.bob


def test_attack_requires_triangle_free() -> None:
    with pytest.raises(DomainError):
        policy_bob_attack(make_torus(3, 3))


@settings(max_examples=30, deadline=None)
@given(small_tf_graphs(max_n=5))
def test_attack_wins_below_a1(g: Graph) -> None:
    attack = policy_bob_attack(g)
    for a in range(1, a1_by_alpha(g)):
        assert verify_policy(mct_spec(g, a, 1, Player.alice), attack, Role.maker)


@pytest.mark.parametrize(("g", "a", "start"), [(make_cycle(5), 1, Player.alice), (make_torus(3, 3), 1, Player.bob)])
def test_exact_play_reproduces_solve(g: Graph, a: int, start: Player) -> None:
    spec = mct_spec(g, a, 1, start)
    played = simulate(spec, exact_policy(), exact_policy())
    assert played.outcome.winner is solve(spec).winner


def test_random_policy_is_reproducible() -> None:
    spec = mct_spec(make_grid(3, 3), 1, 1, Player.alice)
    first = simulate(spec, random_policy(7), random_policy(8))
    again = simulate(spec, random_policy(7), random_policy(8))
    assert first.transcript == again.transcript
    assert first.transcript[0].label.startswith("(")


def test_illegal_pick_is_a_policy_fault() -> None:
    spec = mct_spec(make_path(3), 1, 1, Player.bob)
    with pytest.raises(PolicyFaultError) as info:
        simulate(spec, Stubborn(), Stubborn())
    assert info.value.vertex == 0
    assert info.value.policy == "stubborn"


def test_policies_satisfy_the_protocol() -> None:
    spec = mct_spec(make_complete(2), 1, 1, Player.alice)
    for policy in (Stubborn(), exact_policy(), random_policy(0), policy_breaker_pairing(spec)):
        assert isinstance(policy, StrategyPolicy)
