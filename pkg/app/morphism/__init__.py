# app/morphism/__init__.py
from app.morphism.construct import expand, reduce_once
from app.morphism.params import (
    MonomialImage,
    MorphismParams,
    PsiBlocks,
    morphism_params,
    p2_obstruction,
    psi_matrix,
    psi_scalar,
)
from app.morphism.plan import ReductionPlan, plan_reduction, reachable_targets, reduce_full

__all__ = [
    "MonomialImage",
    "MorphismParams",
    "PsiBlocks",
    "ReductionPlan",
    "expand",
    "morphism_params",
    "p2_obstruction",
    "plan_reduction",
    "psi_matrix",
    "psi_scalar",
    "reachable_targets",
    "reduce_full",
    "reduce_once",
]
