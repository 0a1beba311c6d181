"""
命令行入口
fqx-conjugacy <子命令> <问题文件...> [--jobs N] [--budget N] [--precision N]

报告写到 stdout, 日志与统计写到 stderr。
退出码: 0 肯定结论, 1 否定结论, 2 用法或解析错误, 3 内部不变量被违反。
"""
import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from .problem import ProblemFile, load_problem
from .report import (
    format_bound,
    format_centralizer,
    format_norm,
    format_pell,
    format_units,
    format_verify,
)
from .selftest import run_selftest
from ..algebra.normsolver import solve_norm
from ..algebra.quadring import QuadCase, QuadContext
from ..algebra.units import fundamental_unit, pell_fundamental
from ..arithmetic.poly import Poly
from ..conjugacy.bounds import degree_bound
from ..conjugacy.centralizer import centralizer_generator
from ..conjugacy.certificate import read_witness, verify_witness
from ..conjugacy.decide import decide
from ..core.config import settings
from ..core.logger import PACKAGE_LOGGER, get_logger_manager
from ..exceptions import InvalidInput
from ..utils.error_handler import handle_error

logger = logging.getLogger(__name__)

EXIT_YES, EXIT_NO, EXIT_USAGE = 0, 1, 2


@dataclass
class Outcome:
    code: int
    text: str


# -------------------------------------------------------------------- 子命令


def _context(problem: ProblemFile) -> QuadContext:
    """特征 2: u^2 + b*uv + c*v^2; 奇特征: u^2 + b*uv - c*v^2"""
    F = problem.field
    b = problem.poly("b", Poly.zero(F))
    c = problem.poly("c")
    one = Poly.one(F)
    if F.p == 2:
        return QuadContext.from_form(one, b, c)
    return QuadContext.from_form(one, b, -c)


def cmd_decide(problem: ProblemFile, args: argparse.Namespace) -> Outcome:
    cert = decide(problem.matrix("A"), problem.matrix("B"))
    return Outcome(EXIT_YES if cert.is_conjugate else EXIT_NO, cert.serialize(args.emit_witness))


def cmd_centralizer(problem: ProblemFile, args: argparse.Namespace) -> Outcome:
    report = centralizer_generator(problem.matrix("A"))
    return Outcome(EXIT_YES if report.infinite else EXIT_NO, format_centralizer(report))


def cmd_pell(problem: ProblemFile, args: argparse.Namespace) -> Outcome:
    D = problem.poly("D")
    u, v = pell_fundamental(D)
    return Outcome(EXIT_YES, format_pell(D, u, v))


def cmd_units(problem: ProblemFile, args: argparse.Namespace) -> Outcome:
    ctx = _context(problem)
    if ctx.case != QuadCase.REAL:
        return Outcome(EXIT_NO, format_units(ctx, None))
    unit = fundamental_unit(ctx)
    original = ctx.transform.to_original(unit.generator.u, unit.generator.v)
    return Outcome(EXIT_YES, format_units(ctx, unit, original))


def cmd_solve_norm(problem: ProblemFile, args: argparse.Namespace) -> Outcome:
    report = solve_norm(_context(problem), problem.poly("d"))
    return Outcome(EXIT_YES if report.solvable else EXIT_NO, format_norm(report))


def cmd_bound(problem: ProblemFile, args: argparse.Namespace) -> Outcome:
    return Outcome(EXIT_YES, format_bound(degree_bound(problem.matrix("A"), problem.matrix("B"))))


Command = Callable[[ProblemFile, argparse.Namespace], Outcome]

COMMANDS = {
    "decide": cmd_decide,
    "centralizer": cmd_centralizer,
    "pell": cmd_pell,
    "units": cmd_units,
    "solve-norm": cmd_solve_norm,
    "bound": cmd_bound,
}


# -------------------------------------------------------------------- 执行


def _run_file(command: Command, path: str, args: argparse.Namespace) -> Outcome:
    try:
        return command(load_problem(path), args)
    except Exception as e:
        code = handle_error(e, logger)
        message = getattr(e, "message", str(e))
        return Outcome(code, f"error: {type(e).__name__}: {message}\n")


def run_files(command: Command, paths: Sequence[str], args: argparse.Namespace) -> int:
    """各文件独立处理, 报告按输入顺序输出"""
    jobs = max(1, args.jobs)
    if jobs == 1 or len(paths) == 1:
        outcomes = [_run_file(command, p, args) for p in paths]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda p: _run_file(command, p, args), paths))
    for path, outcome in zip(paths, outcomes):
        if len(paths) > 1:
            sys.stdout.write(f"== {path} ==\n")
        sys.stdout.write(outcome.text)
    return max(o.code for o in outcomes)


def run_verify(args: argparse.Namespace) -> int:
    try:
        problem = load_problem(args.problem)
        with open(args.certificate, "r", encoding="utf-8") as f:
            U = read_witness(problem.field, f.read())
        ok = verify_witness(problem.matrix("A"), problem.matrix("B"), U)
    except OSError as e:
        return handle_error(InvalidInput(f"无法读取证书: {e}"), logger)
    except Exception as e:
        return handle_error(e, logger)
    sys.stdout.write(format_verify(ok))
    return EXIT_YES if ok else EXIT_NO


def run_selftest_command(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else settings.SELFTEST_BUDGET
    results = run_selftest(budget, args.only or None)
    for result in results:
        sys.stdout.write(result.line() + "\n")
    stats = get_logger_manager().get_stats()
    sys.stderr.write(f"{stats['系统信息']}, 运行时间 {stats['运行时间']:.2f}s\n")
    return EXIT_YES if all(r.passed for r in results) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqx-conjugacy",
        description="GL(2, F_q[x]) 中 2x2 矩阵的共轭判定",
    )
    parser.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS, help="并行处理的文件数")
    parser.add_argument("--budget", type=int, default=None, help="自检规模, 10 为完整规模")
    parser.add_argument("--precision", type=int, default=None, help="Laurent 级数的最小精度")
    parser.add_argument("--log-level", default=None, help="日志级别")
    parser.add_argument(
        "--emit-witness",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="在证书中输出见证矩阵",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("files", nargs="+")
    verify = sub.add_parser("verify", help="重新验证证书中的见证矩阵")
    verify.add_argument("problem")
    verify.add_argument("certificate")
    selftest = sub.add_parser("selftest", help="运行自检语料")
    selftest.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    selftest.add_argument("--only", nargs="*", default=None)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_YES
    get_logger_manager().configure(args.log_level)
    if args.precision is not None:
        settings.LAURENT_MIN_PRECISION = args.precision
    logging.getLogger(PACKAGE_LOGGER).debug(f"命令 {args.command}, 环境 {settings.ENVIRONMENT}")
    if args.command == "verify":
        return run_verify(args)
    if args.command == "selftest":
        return run_selftest_command(args)
    return run_files(COMMANDS[args.command], args.files, args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
