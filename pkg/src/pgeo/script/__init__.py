"""Construction scripts: parser, evaluator and SVG renderer."""
from .ast import Script, pretty
from .evaluator import Env, RunReport, evaluate, run_file, run_source
from .parser import parse
from .render import render_svg

__all__ = ["Env", "RunReport", "Script", "evaluate", "parse", "pretty", "render_svg", "run_file", "run_source"]
