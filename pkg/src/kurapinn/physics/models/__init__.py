from .initial_condition_kind import InitialConditionKind  # noqa
from .problem_spec import ProblemSpec  # noqa
from .quadrature_rule import QuadratureRule  # noqa
