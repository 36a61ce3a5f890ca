"""
Command handlers for the cornerforge command line.
"""

import logging
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO

from ..construction import (
    BehrendParams, ConstructionParams, REPORT_FIELDS, behrend_report, behrend_search,
    behrend_set, best_r, c_main_term, c_target, choose_params, corner_size, count_by_r,
    density_report, enumerate_A_r, lift_3ap_free, round_sig,
)
from ..corners import find_corner, read_points, write_points
from ..errors import (
    CornerForgeError, DomainError, EXIT_CORNER_FOUND, EXIT_OK, ResourceError, exit_code_for,
)
from ..oracle import max_corner_free
from ..utils import Config
from .output import dump_json, write_csv, write_json_lines

logger = logging.getLogger(__name__)


class CommandHandler:
    """Runs one parsed command and turns the outcome into an exit code."""

    def __init__(self, config: Optional[Config] = None,
                 stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        """
        Initialize command handler.

        Args:
            config: Run configuration (defaults plus environment if omitted)
            stdout: Stream for results
            stderr: Stream for error messages
        """
        self.config = config or Config()
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.handlers: Dict[str, Callable[[Any], int]] = {
            'construct': self._handle_construct,
            'count': self._handle_count,
            'verify': self._handle_verify,
            'behrend': self._handle_behrend,
            'compare': self._handle_compare,
            'oracle': self._handle_oracle,
        }

    def process_command(self, args) -> int:
        """
        Run a command.

        Args:
            args: argparse namespace with a `command` attribute

        Returns:
            Process exit code
        """
        handler = self.handlers.get(args.command)
        if handler is None:
            self._error(f"unknown command: {args.command}")
            return exit_code_for(DomainError(args.command))
        try:
            return handler(args)
        except CornerForgeError as e:
            self._error(str(e))
            return exit_code_for(e)
        except OSError as e:
            self._error(f"{e.strerror or e}: {e.filename}")
            return exit_code_for(DomainError(str(e)))

    # Settings shared by several commands
    @property
    def threads(self) -> int:
        return int(self.config.get('threads', 1))

    @property
    def digits(self) -> int:
        return int(self.config.get('report.significant_digits', 6))

    def _error(self, message: str) -> None:
        self.stderr.write(f"error: {message}\n")

    def _max_points(self, args) -> int:
        if args.max_points is not None:
            return args.max_points
        return int(self.config.get('enumeration.max_points'))

    def _emit_reports(self, records: List[Dict[str, Any]], fmt: str,
                      fields=REPORT_FIELDS) -> None:
        if fmt == 'csv':
            write_csv(records, fields, self.stdout)
        else:
            write_json_lines(records, self.stdout)

    def _handle_construct(self, args) -> int:
        params = ConstructionParams(args.q, args.d, args.r)
        if params.r is None:
            params = params.with_radius(best_r(params.q, params.d)[0])

        report = density_report(params)
        if args.out:
            points = enumerate_A_r(params, max_points=self._max_points(args))
            write_points(args.out, params.N, points)

        self._emit_reports([report.to_record(self.digits)], args.format)
        return EXIT_OK

    def _handle_count(self, args) -> int:
        params = ConstructionParams(args.q, args.d)
        table = count_by_r(params.q, params.d)
        r_best, count_best = best_r(params.q, params.d)

        if args.format == 'csv':
            rows = [{'kind': 'entry', 'r': r, 'count': str(c)} for r, c in table.items()]
            rows.append({'kind': 'best', 'r': r_best, 'count': str(count_best)})
            write_csv(rows, ('kind', 'r', 'count'), self.stdout)
        else:
            self.stdout.write(dump_json({
                'q': params.q,
                'd': params.d,
                'N': str(params.N),
                'total': str(table.total()),
                'entries': {str(r): str(c) for r, c in table.items()},
                'best': {'r': r_best, 'count': str(count_best)},
            }) + "\n")
        return EXIT_OK

    def _handle_verify(self, args) -> int:
        points = read_points(args.input)
        witness = find_corner(points, threads=self.threads,
                              parallel_min_rows=int(self.config.get('verify.parallel_min_rows', 64)))
        if witness is None:
            self.stdout.write("corner-free\n")
            return EXIT_OK
        self.stdout.write(dump_json(witness.to_dict()) + "\n")
        return EXIT_CORNER_FOUND

    def _handle_behrend(self, args) -> int:
        if args.n_target is not None:
            search = self._behrend_search(args.n_target)
            params, N = search.params, args.n_target
        elif args.D is not None and args.n is not None:
            params = BehrendParams(args.D, args.n, args.r)
            N = params.N
        else:
            raise DomainError("behrend needs --n-target or both --D and --n")

        report = behrend_report(params, N)
        if args.out:
            params = params.with_radius(report.r)
            cap = self._max_points(args)
            if report.size > cap:
                raise ResourceError(
                    f"lifted Behrend set has {report.size} points, above the cap of {cap}",
                    count=report.size)
            S = behrend_set(params)
            check_limit = int(self.config.get('behrend.check_limit', 2000))
            write_points(args.out, N, lift_3ap_free(S, N, check_limit=check_limit))
            logger.info("Behrend set |S|=%d, lifted size %d", len(S), corner_size(S, N))

        self._emit_reports([report.to_record(self.digits)], args.format)
        return EXIT_OK

    def _behrend_search(self, N_target: int):
        return behrend_search(
            N_target,
            d_span=int(self.config.get('behrend.d_span', 3)),
            work_limit=int(self.config.get('behrend.work_limit', 5_000_000)),
            threads=self.threads,
        )

    def _handle_compare(self, args) -> int:
        # validate every d before computing anything
        all_params = [choose_params(d) for d in args.d_list]
        target = round_sig(c_target(), self.digits)

        rows = []
        for params in all_params:
            green = density_report(params)
            N_target = args.n_target if args.n_target is not None else params.N
            search = self._behrend_search(N_target)
            behrend = behrend_report(search.params, N_target)
            logger.info("d=%d: green c_emp=%.4f, behrend c_emp=%.4f",
                        params.d, green.c_emp, behrend.c_emp)
            rows.append({
                'd': params.d,
                'green': green.to_record(self.digits),
                'behrend': behrend.to_record(self.digits),
                'behrend_skipped': search.skipped,
                'behrend_skipped_floor': str(search.skipped_floor),
                'c_main': round_sig(c_main_term(params.q, params.d), self.digits),
                'c_target': target,
            })

        if args.format == 'csv':
            records = []
            for row in rows:
                for key in ('green', 'behrend'):
                    records.append(dict(row[key], c_target=target))
            write_csv(records, REPORT_FIELDS + ('c_target',), self.stdout)
        else:
            write_json_lines(rows, self.stdout)
        return EXIT_OK

    def _handle_oracle(self, args) -> int:
        cap = args.max_n if args.max_n is not None else int(self.config.get('oracle.max_n', 6))
        result = max_corner_free(args.n, max_n=cap)
        self.stdout.write(dump_json(result.to_dict()) + "\n")
        return EXIT_OK
