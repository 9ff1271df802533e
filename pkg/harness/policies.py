from enum import StrEnum

from loguru import logger

from games import (
    GameSpec,
    StrategyPolicy,
    exact_policy,
    policy_alice_deletion,
    policy_bob_attack,
    policy_breaker_pairing,
    random_policy,
)
from graphs import Graph
from graphs.errors import DomainError
from invariants import min_deletion_witness

ENGINE_EXACT_LIMIT = 14


class AlicePolicy(StrEnum):
    exact = "exact"
    pairing = "pairing"
    deletion = "deletion"
    random = "random"


class BobPolicy(StrEnum):
    exact = "exact"
    attack = "attack"
    random = "random"


def alice_policy(
    name: AlicePolicy, g: Graph, spec: GameSpec, seed: int = 0, budget: int | None = None
) -> StrategyPolicy:
    match name:
        case AlicePolicy.exact:
            return exact_policy(budget)
        case AlicePolicy.pairing:
            return policy_breaker_pairing(spec)
        case AlicePolicy.deletion:
            witness = min_deletion_witness(g)
            if witness.t > spec.breaker_per_turn:
                logger.warning(
                    "a={} is below the deletion bound t={}: Alice can lose", spec.breaker_per_turn, witness.t
                )
            return policy_alice_deletion(g, witness)
        case AlicePolicy.random:
            return random_policy(seed)


def bob_policy(name: BobPolicy, g: Graph, seed: int = 0, budget: int | None = None) -> StrategyPolicy:
    match name:
        case BobPolicy.exact:
            return exact_policy(budget)
        case BobPolicy.attack:
            return policy_bob_attack(g)
        case BobPolicy.random:
            return random_policy(seed)


def engine_for_alice(g: Graph, spec: GameSpec, budget: int | None = None) -> tuple[StrategyPolicy, str | None]:
    """The policy the play loop uses for Alice, and a banner when it is not optimal play."""
    if g.n <= ENGINE_EXACT_LIMIT:
        return exact_policy(budget), None
    try:
        return policy_breaker_pairing(spec), "Board too large for exact play: Alice uses the clique pairing strategy."
    except DomainError as e:
        logger.debug("pairing unavailable: {}", e)
    try:
        witness = min_deletion_witness(g)
        if witness.t <= spec.breaker_per_turn:
            banner = "Board too large for exact play: Alice uses the deletion strategy."
            return policy_alice_deletion(g, witness), banner
    except DomainError as e:
        logger.debug("deletion strategy unavailable: {}", e)
    return exact_policy(budget), "No scripted strategy applies: Alice searches exactly, which may exhaust the budget."


def engine_for_bob(g: Graph, budget: int | None = None) -> tuple[StrategyPolicy, str | None]:
    if g.n <= ENGINE_EXACT_LIMIT:
        return exact_policy(budget), None
    if g.find_triangle() is None:
        return policy_bob_attack(g), "Board too large for exact play: Bob uses the attack strategy."
    return exact_policy(budget), "No scripted strategy applies: Bob searches exactly, which may exhaust the budget."
