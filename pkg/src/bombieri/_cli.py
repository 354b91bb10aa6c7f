"""Console script for bombieri."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Callable, Sequence
from typing import Any

from ._api import get_logger, init, run_scope
from ._apolar import (
    NormValue,
    apolar_norm_sq,
    bombieri_norm_sq,
    check_bombieri,
)
from ._constants import (
    attach_constants,
    c1_constant,
    c2_constant,
    c2_squared_exact,
    falling_ratio,
    necessity_bound_check,
    sphere_min_sum_sq,
)
from ._errors import BombieriError, PreconditionError
from ._extremal import extremal_ratios
from ._groebner import MonomialOrder, variety_only_origin
from ._ksexp import KSReport, ks_exponent, level_system, scan_levels
from ._models import Config, OutputFormat
from ._options import parse_m_range, parse_witness
from ._polycore import Polynomial, homogeneous_degree, require_homogeneous
from ._polyparse import display_variables, parse_poly
from ._report import Approx, Report
from ._reproduce import reproduce_examples
from ._verify import run_identity_suites


def _parse_all(
    texts: Sequence[str], variables: Sequence[str]
) -> list[Polynomial]:
    """Parse every input over one shared dimension."""
    names = list(variables) or None
    polys = [parse_poly(t, names) for t in texts]
    if names is None:
        d = max((p.dimension for p in polys), default=0)
        polys = [
            p if p.dimension == d else parse_poly(t, dimension=d)
            for t, p in zip(texts, polys)
        ]
    return polys


def _ks_payload(report: KSReport) -> dict[str, Any]:
    return {
        'degree': report.degree,
        'dimension': report.dimension,
        'exponent': report.exponent,
        'rho_star': report.rho_star,
        'certified_rho': report.certified_rho,
        'method': report.method,
        'gradient_rank': report.gradient_rank,
        'levels': report.levels,
        'witness': (
            None
            if report.witness is None
            else {
                'point': report.witness.as_pairs(),
                'residual': Approx(report.witness.residual, 1e-20, 'abs'),
            }
        ),
        'note': report.note,
        'constants': report.constants,
    }


def _variety_payload(
    verdict: Any, names: Sequence[str]
) -> dict[str, Any]:
    return {
        'only_origin': verdict.only_origin,
        'missing_pure_power_variables': [
            names[j] for j in verdict.missing_pure_power_variables
        ],
        'basis': verdict.basis,
    }


try:
    import typer

except ImportError:  # pragma: no cover

    def app():
        raise SystemExit(
            'bombieri: the command line needs the `cli` extra '
            '(pip install "bombieri[cli]")'
        )

else:
    from typing import Annotated

    from rich.console import Console
    from rich.markup import escape
    from rich.table import Table

    app = typer.Typer(
        help='Khavinson-Shapiro exponents and Bombieri bounds.',
        no_args_is_help=True,
    )
    err_console = Console(stderr=True)

    Order = Annotated[
        str, typer.Option('--order', help='grevlex, lex or grlex.')
    ]
    Vars = Annotated[
        str | None,
        typer.Option('--vars', help='Comma-separated variable names.'),
    ]
    Starts = Annotated[
        int, typer.Option('--starts', help='Optimizer restarts.')
    ]
    Seed = Annotated[int, typer.Option('--seed', help='Random seed.')]
    MaxIter = Annotated[
        int,
        typer.Option('--max-iter', help='Descent steps per start.'),
    ]
    Tolerance = Annotated[
        float,
        typer.Option(
            '--tolerance', help='Relative projected-gradient tolerance.'
        ),
    ]
    LogLevel = Annotated[
        str,
        typer.Option('--log-level', help='Level of the stderr JSON log.'),
    ]
    MRange = Annotated[
        str | None,
        typer.Option('--m-range', help='Inclusive degree range, e.g. 4..40.'),
    ]

    def _config(
        *,
        order: str = 'grevlex',
        variables: str | None = None,
        starts: int | None = None,
        seed: int | None = None,
        max_iter: int | None = None,
        tolerance: float | None = None,
        log_level: str = 'warning',
    ) -> Config:
        try:
            config = Config.from_options(
                order=order,
                variables=variables,
                starts=starts,
                seed=seed,
                max_iter=max_iter,
                tolerance=tolerance,
                log_level=log_level,
            )
        except ValueError as e:
            raise typer.BadParameter(str(e)) from None
        init(config, reset=True)
        get_logger('bombieri')
        return config

    def _m_range(value: str | None, default: range | None) -> range | None:
        if value is None:
            return default
        try:
            return parse_m_range(value)
        except ValueError as e:
            raise typer.BadParameter(str(e), param_hint='--m-range') from None

    def _run(
        command: str,
        config: Config,
        compute: Callable[[], tuple[dict[str, Any], Any, bool]],
    ) -> None:
        """
        Run ``compute`` (returning inputs, result and an ok flag) and print
        one JSON report; library errors become an error record, exit 1.
        """
        try:
            with run_scope(command, seed=config.seed):
                inputs, result, ok = compute()
        except BombieriError as e:
            typer.echo(Report.build(command, {}, e.to_record()).to_json())
            err_console.print(f'[bold red]error:[/] {escape(str(e))}')
            raise typer.Exit(1) from None

        inputs = {'options': _options_record(config), **inputs}
        report = Report.build(
            command,
            inputs,
            result,
            seed=config.seed,
            variables=config.variables or None,
        )
        typer.echo(report.to_json())
        if not ok:
            raise typer.Exit(1)

    def _options_record(config: Config) -> dict[str, Any]:
        return {
            'order': config.order,
            'variables': config.variables,
            'starts': config.starts,
            'max_iter': config.max_iter,
            'tolerance': config.tolerance,
        }

    @app.command('ks-exponent')
    def ks_exponent_cmd(
        poly: str,
        scan: Annotated[
            bool, typer.Option('--scan', help='Also verdict every level.')
        ] = False,
        constants: Annotated[
            bool, typer.Option('--constants', help='Attach C1 and C2.')
        ] = False,
        order: Order = 'grevlex',
        variables: Vars = None,
        starts: Starts = 64,
        seed: Seed = 0,
        max_iter: MaxIter = 2000,
        tolerance: Tolerance = 1e-12,
        log_level: LogLevel = 'warning',
    ):
        """Exact Khavinson-Shapiro exponent of a homogeneous polynomial."""
        config = _config(
            order=order,
            variables=variables,
            starts=starts,
            seed=seed,
            max_iter=max_iter,
            tolerance=tolerance,
            log_level=log_level,
        )

        def compute():
            (p,) = _parse_all([poly], config.variables)
            mo = MonomialOrder(config.order)
            solver = config.solver_options()
            report = ks_exponent(p, mo, **solver)
            if constants:
                attach_constants(report, p, order=mo, **solver)
            result = _ks_payload(report)
            if scan:
                result['scan'] = scan_levels(p, mo)
            return {'polynomial': p, 'dimension': p.dimension}, result, True

        _run('ks-exponent', config, compute)

    @app.command('groebner')
    def groebner_cmd(
        polys: list[str],
        level: Annotated[
            int | None,
            typer.Option(
                '--level',
                help='Use the order-RHO derivatives of a single polynomial.',
            ),
        ] = None,
        order: Order = 'grevlex',
        variables: Vars = None,
        log_level: LogLevel = 'warning',
    ):
        """Reduced Groebner basis and the only-origin verdict."""
        config = _config(
            order=order, variables=variables, log_level=log_level
        )

        def compute():
            gens = _parse_all(polys, config.variables)
            inputs: dict[str, Any] = {'polynomials': gens}
            if level is not None:
                if len(gens) != 1:
                    raise PreconditionError(
                        '--level takes exactly one polynomial'
                    )
                inputs['level'] = level
                gens = level_system(gens[0], level)
                if not gens:
                    raise PreconditionError(
                        f'every derivative of order {level} is zero'
                    )
            verdict = variety_only_origin(gens, MonomialOrder(config.order))
            names = config.variables or display_variables(gens[0].dimension)
            return inputs, _variety_payload(verdict, names), True

        _run('groebner', config, compute)

    @app.command('apolar-norm')
    def apolar_norm_cmd(
        poly: str,
        variables: Vars = None,
        log_level: LogLevel = 'warning',
    ):
        """Exact squared apolar norm (and Bombieri norm if homogeneous)."""
        config = _config(variables=variables, log_level=log_level)

        def compute():
            (p,) = _parse_all([poly], config.variables)
            norm = NormValue.of(p)
            result: dict[str, Any] = {
                'apolar_norm_sq': apolar_norm_sq(p),
                'norm': Approx(norm.norm),
            }
            if homogeneous_degree(p) is not None:
                result['bombieri_norm_sq'] = bombieri_norm_sq(p)
            return {'polynomial': p}, result, True

        _run('apolar-norm', config, compute)

    @app.command('bombieri-check')
    def bombieri_check_cmd(
        p_text: Annotated[str, typer.Argument(metavar='P')],
        q_text: Annotated[str, typer.Argument(metavar='Q')],
        variables: Vars = None,
        log_level: LogLevel = 'warning',
    ):
        """Exact check of ||PQ|| >= ||P|| ||Q|| for homogeneous P, Q."""
        config = _config(variables=variables, log_level=log_level)

        def compute():
            p, q = _parse_all([p_text, q_text], config.variables)
            check = check_bombieri(p, q)
            result = {
                'product_norm_sq': check.product_norm_sq,
                'p_norm_sq': check.p_norm_sq,
                'q_norm_sq': check.q_norm_sq,
                'ratio': check.ratio,
                'holds': check.holds,
            }
            return {'p': p, 'q': q}, result, check.holds

        _run('bombieri-check', config, compute)

    @app.command('constants')
    def constants_cmd(
        poly: str,
        rho: Annotated[
            int | None,
            typer.Option(
                '--rho', help='Derivative level; defaults to the certified.'
            ),
        ] = None,
        witness: Annotated[
            str | None,
            typer.Option('--witness', help='Exact zero, e.g. "1,i".'),
        ] = None,
        m_range: MRange = None,
        order: Order = 'grevlex',
        variables: Vars = None,
        starts: Starts = 64,
        seed: Seed = 0,
        max_iter: MaxIter = 2000,
        tolerance: Tolerance = 1e-12,
        log_level: LogLevel = 'warning',
    ):
        """C1 at a level with no common zero; C2 at an exact witness."""
        config = _config(
            order=order,
            variables=variables,
            starts=starts,
            seed=seed,
            max_iter=max_iter,
            tolerance=tolerance,
            log_level=log_level,
        )
        try:
            point = parse_witness(witness) if witness is not None else None
        except (ValueError, BombieriError) as e:
            raise typer.BadParameter(str(e), param_hint='--witness') from None
        requested = _m_range(m_range, None)

        def compute():
            (p,) = _parse_all([poly], config.variables)
            mo = MonomialOrder(config.order)
            level = rho
            if level is None:
                level = ks_exponent(p, mo, witness=False).certified_rho
                if level is None:
                    raise PreconditionError(
                        'no derivative level to bound; pass --rho'
                    )
            k = require_homogeneous(p)
            result: dict[str, Any] = {
                'rho': level,
                'sphere_min': sphere_min_sum_sq(
                    p, level, **config.solver_options()
                ),
                'c1': c1_constant(
                    p, level, order=mo, **config.solver_options()
                ),
            }
            ok = True
            if point is not None:
                result['c2_squared'] = c2_squared_exact(p, level, point)
                result['c2'] = c2_constant(p, level, point)
                table = necessity_bound_check(
                    p, level, point, requested or range(k, max(k, 40) + 1)
                )
                result['necessity'] = table
                ok = not table.violations
            inputs = {'polynomial': p, 'witness': point}
            return inputs, result, ok

        _run('constants', config, compute)

    @app.command('extremal')
    def extremal_cmd(
        poly: str,
        m_range: MRange = None,
        output: Annotated[
            OutputFormat,
            typer.Option('--format', help='csv, json or text.'),
        ] = OutputFormat.CSV,
        variables: Vars = None,
        log_level: LogLevel = 'warning',
    ):
        """I_m and S_m of the multiplication operator, per degree m."""
        config = _config(variables=variables, log_level=log_level)
        degrees = _m_range(m_range, range(0, 11))

        def compute():
            (p,) = _parse_all([poly], config.variables)
            k = require_homogeneous(p)
            rows = []
            for m in degrees:
                row = extremal_ratios(p, m)
                rows.append(
                    {
                        'm': m,
                        'dim': row.dimension,
                        'I_m': row.lower,
                        'S_m': row.upper,
                        'pinasco_ratio': row.upper
                        / math.sqrt(falling_ratio(m, k)),
                    }
                )
            return {'polynomial': p, 'm_range': degrees}, rows, True

        if output is OutputFormat.JSON:
            _run('extremal', config, compute)
            return

        try:
            with run_scope('extremal', seed=config.seed):
                _, rows, _ = compute()
        except BombieriError as e:
            err_console.print(f'[bold red]error:[/] {escape(str(e))}')
            raise typer.Exit(1) from None

        columns = ('m', 'dim', 'I_m', 'S_m', 'pinasco_ratio')
        if output is OutputFormat.CSV:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator='\n')
            writer.writerow(columns)
            for row in rows:
                writer.writerow(
                    [
                        row['m'],
                        row['dim'],
                        f'{row["I_m"]:.15g}',
                        f'{row["S_m"]:.15g}',
                        f'{row["pinasco_ratio"]:.15g}',
                    ]
                )
            typer.echo(buf.getvalue(), nl=False)
        else:
            table = Table(*columns, title=poly)
            for row in rows:
                table.add_row(
                    str(row['m']),
                    str(row['dim']),
                    f'{row["I_m"]:.8g}',
                    f'{row["S_m"]:.8g}',
                    f'{row["pinasco_ratio"]:.6f}',
                )
            Console().print(table)

    @app.command('verify-identities')
    def verify_identities_cmd(
        count: Annotated[
            int, typer.Option('--count', help='Cases per exact suite.')
        ] = 200,
        bargmann: Annotated[
            bool,
            typer.Option(
                '--bargmann/--no-bargmann', help='Run the quadrature suite.'
            ),
        ] = True,
        seed: Seed = 0,
        log_level: LogLevel = 'warning',
    ):
        """Randomized exact identity checks plus the quadrature check."""
        config = _config(seed=seed, log_level=log_level)

        def compute():
            suites = run_identity_suites(
                config.seed, count, bargmann=bargmann
            )
            passed = all(s.passed for s in suites)
            result = {
                'passed': passed,
                'suites': [
                    {
                        'name': s.name,
                        'cases': s.cases,
                        'failures': s.failures,
                        'max_deviation': Approx(s.max_deviation, 0.0, 'abs'),
                        'passed': s.passed,
                        'failed': s.failed,
                    }
                    for s in suites
                ],
            }
            return {'count': count, 'bargmann': bargmann}, result, passed

        _run('verify-identities', config, compute)

    @app.command('reproduce-paper')
    def reproduce_examples_cmd(
        order: Order = 'grevlex',
        log_level: LogLevel = 'warning',
    ):
        """Rerun both worked quartic examples and diff the certified parts."""
        config = _config(order=order, log_level=log_level)

        def compute():
            result = reproduce_examples(MonomialOrder(config.order))
            return {}, result, result.ok

        _run('reproduce-paper', config, compute)

    # older name, kept out of --help
    app.command('reproduce-examples', hidden=True)(reproduce_examples_cmd)


if __name__ == '__main__':
    app()
