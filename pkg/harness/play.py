"""Text-mode play loop between a human and the engine."""

from collections.abc import Callable

from pydantic import BaseModel

from games import (
    GameSpec,
    GameState,
    Outcome,
    Player,
    SimulationResult,
    Solver,
    StrategyPolicy,
    TranscriptEntry,
    apply_pick,
    legal_picks,
    next_mover,
    winner,
)
from graphs import Graph
from graphs.errors import IllegalPickError, PolicyFaultError

from .policies import ENGINE_EXACT_LIMIT

QUIT_WORDS = {"quit", "q", "exit"}


class PlaySession(BaseModel):
    """A simulate-shaped record; `outcome` stays empty when the human quits early."""

    outcome: Outcome | None = None
    transcript: list[TranscriptEntry]
    quit: bool = False

    def as_simulation(self) -> SimulationResult:
        if self.outcome is None:
            raise ValueError("the session ended before the game was decided")
        return SimulationResult(outcome=self.outcome, transcript=self.transcript)


def _pick_index(spec: GameSpec, state: GameState) -> tuple[int, int]:
    """(position of the coming pick within the current turn, the mover's quota), both 1-based."""
    mover = next_mover(spec, state)
    done = 0
    picks = state.picks
    while done < picks and spec.mover_after(picks - done - 1) is mover:
        done += 1
    return done + 1, spec.per_turn(mover)


def play_session(
    spec: GameSpec,
    g: Graph,
    human: Player,
    engine: StrategyPolicy,
    ask: Callable[[str], str],
    say: Callable[[str], None],
    budget: int | None = None,
) -> PlaySession:
    state = GameState()
    transcript: list[TranscriptEntry] = []
    helper = Solver(spec, budget=budget) if g.n <= ENGINE_EXACT_LIMIT else None
    while (done := winner(spec, state)) is None:
        role = next_mover(spec, state)
        player = role.player
        if player is human:
            k, quota = _pick_index(spec, state)
            legal = ", ".join(g.describe(legal_picks(spec, state)))
            say(f"{player} to pick ({k} of {quota}). Legal: {legal}")
            text = ask("pick (label, index, 'hint' or 'quit')").strip()
            if text.lower() in QUIT_WORDS:
                say("Session ended before the game was decided.")
                return PlaySession(transcript=transcript, quit=True)
            if text.lower() == "hint":
                if helper is None:
                    say("No hint: the board is too large for exact play.")
                else:
                    say(f"Hint: {g.label(helper.best_pick(state))}")
                continue
            try:
                v = g.index_of(text)
                state = apply_pick(spec, state, v)
            except (KeyError, IllegalPickError) as e:
                say(f"Illegal pick: {e}")
                continue
        else:
            v = engine.pick(spec, state)
            try:
                state = apply_pick(spec, state, v)
            except IllegalPickError as e:
                raise PolicyFaultError(engine.name, v, str(e)) from e
            say(f"{player} picks {g.label(v)}")
        transcript.append(TranscriptEntry(player=player, vertex=v, label=g.label(v)))
    verdict = "You win." if done.player is human else "You lose."
    say(f"{done.player} wins ({done}). {verdict}")
    outcome = Outcome(winner=done, variation=tuple(t.vertex for t in transcript), degenerate=spec.degenerate)
    return PlaySession(outcome=outcome, transcript=transcript)
