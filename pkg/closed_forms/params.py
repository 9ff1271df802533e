from pydantic import BaseModel, ConfigDict, model_validator

from graphs import Graph, make_caterpillar, make_cylinder, make_grid, make_torus

from .families import caterpillar_cases, cylinder_cases, grid_cases, realization_value, torus_cases
from .types import CasedPair, CasedValue, Family, UnionRealization

_ARITY = {
    Family.caterpillar: 2,
    Family.torus: 2,
    Family.cylinder: 2,
    Family.grid: 2,
    Family.union_realization: 3,
}


class FamilyParams(BaseModel):
    """A member of one of the closed-form families: (m, l), (n, m) or (k, l, i)."""

    model_config = ConfigDict(frozen=True)

    family: Family
    params: tuple[int, ...]

    @model_validator(mode="after")
    def _check_params(self) -> "FamilyParams":
        want = _ARITY[self.family]
        if len(self.params) != want:
            raise ValueError(f"{self.family} takes {want} parameters, got {len(self.params)}")
        # evaluating the case table validates the theorem's range
        self.thresholds()
        return self

    def build(self) -> Graph:
        match self.family:
            case Family.caterpillar:
                return make_caterpillar(*self.params)
            case Family.torus:
                return make_torus(*self.params)
            case Family.cylinder:
                return make_cylinder(*self.params)
            case Family.grid:
                return make_grid(*self.params)
            case Family.union_realization:
                k, l, i = self.params
                return UnionRealization(k=k, l=l, p=k + i).union()

    def thresholds(self) -> CasedPair:
        match self.family:
            case Family.caterpillar:
                return caterpillar_cases(*self.params)
            case Family.torus:
                return torus_cases(*self.params)
            case Family.cylinder:
                return cylinder_cases(*self.params)
            case Family.grid:
                return grid_cases(*self.params)
            case Family.union_realization:
                k, l, i = self.params
                p = realization_value(k, l, i)
                # Δ of T_{k,p} ∪ T_{l,p} sits on the spine of the longer caterpillar
                delta = p + min(k - 1, 2)
                return CasedPair(
                    a1=CasedValue(value=p, case="a_1(T_{k,k+i} ∪ T_{l,k+i}) = k+i"),
                    a1_prime=CasedValue(value=delta, case="Δ(T_{k,k+i})"),
                )

    def label(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"
