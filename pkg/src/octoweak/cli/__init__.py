"""Expression language, evaluator and the batch verification driver."""

from .checks import VerifyConfig, verify_all
from .evaluator import Value, eval_source, evaluate
from .expr import ExprError, parse, render_source
from .report import CheckResult, render_json, render_markdown

__all__ = ["VerifyConfig", "verify_all", "Value", "eval_source", "evaluate",
           "ExprError", "parse", "render_source", "CheckResult",
           "render_json", "render_markdown"]
