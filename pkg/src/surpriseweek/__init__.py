"""Knowledge sets, surprising days, and S5 model checking for the week
of an announced surprise test."""

from .runs import ALL_RUNS, DAY_SET, DAYS, RUNS, Run, parse_run_set
from .formula import (
    And,
    Atom,
    BOT,
    Bot,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Neg,
    Or,
    TOP,
    any_day,
    big_and,
    big_or,
    chi,
    iverson,
    modal_depth,
    render,
    t_eq,
    t_ge,
    t_gt,
    t_in,
    t_le,
    t_lt,
    t_ne,
)
from .parser import ParseError, parse
from .knowledge import (
    AxiomSystem,
    ModalContextError,
    SurpriseProfile,
    SurprisePreconditionError,
    canonical_systems,
    eval_run,
    is_surprising_by_deduction,
    models_of,
    sigma_of,
    surprise_profile,
    surprising_days,
    tau_of,
)
from .analysis import (
    CaseTag,
    EmptyLawError,
    LawReport,
    MondayStepError,
    StepKind,
    StudentsStep,
    SystemRecord,
    analyze_law,
    check_students_collapse,
    enumerate_axiom_systems,
    refute_initial_step,
    refute_no_friday_step,
    replay_students,
    students_axioms,
)
from .kripke import (
    FrameError,
    FrameProperties,
    KripkeModel,
    ModelFormatError,
    UnknownWorldError,
    World,
    box_signature,
    equivalence_classes,
    eval_world,
    frame_properties,
    model_from_json,
    model_to_dot,
    model_to_json,
    restrict_ge,
    standard_models,
    submodel_at,
    worlds_where,
)
from .s5 import (
    ChoiceReport,
    Condensation,
    UniversalWorld,
    check_no_box_sigma,
    choice_set,
    example_announcements,
    s5_consequence,
    s5_equivalent,
    s5_satisfiable,
    s5_valid,
    sigma,
    sigma_d,
    tau_condense,
    tau_surprising,
    universal_model,
    universal_worlds,
)
from .verification import CheckResult, VerificationReport, run_all

__version__ = "0.1.0"
