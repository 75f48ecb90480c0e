import functools
import logging
import sys
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from scirank.exceptions import ScirankError
from scirank.RunConfig import TUNABLES, RunConfig, as_bool, build_run_config

logger = logging.getLogger("scirank")

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NOT_CONVERGED = 3


def usage_error(parser, message):
    """
    argparse exits with 2 on bad arguments; 2 means a data error here
    """
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


class PipelineCommand(BaseCommand):
    """
    Base class of the scirank commands

    Adds --workspace, --config and one flag per tunable, resolves them into a
    RunConfig and maps failures to exit codes:
    1 usage or configuration, 2 data, 3 non-convergence.
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = functools.partial(usage_error, parser)
        return parser

    def add_arguments(self, parser):
        parser.add_argument("--workspace", default=None, help="directory of the pipeline artifacts")
        parser.add_argument("--config", default=None, help="ini file with a [settings] section")
        tunables = parser.add_argument_group("tunables")
        for tunable in TUNABLES:
            kwargs = {"dest": tunable.name, "type": tunable.parse, "default": None, "help": tunable.help}
            if tunable.choices:
                kwargs["choices"] = tunable.choices
            if tunable.parse is as_bool:
                kwargs.update(nargs="?", const=True)
            tunables.add_argument(tunable.flag, **kwargs)
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        workspace = options.get("workspace") or settings.SCIRANK["WORKSPACE"]
        try:
            run_config = build_run_config(options, workspace, options.get("config"))
        except ValueError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        try:
            self.run(run_config, **options)
        except ScirankError as e:
            logger.error("%s failed: %s", self.__module__.rsplit(".", 1)[-1], e)
            raise CommandError(str(e), returncode=EXIT_DATA)
        except ValueError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def run(self, run_config: RunConfig, **options):
        raise NotImplementedError("subclasses of PipelineCommand must provide a run() method")

    @staticmethod
    def require_file(path) -> Path:
        path = Path(path)
        if not path.is_file():
            raise CommandError(f"input file not found: {path}", returncode=EXIT_USAGE)
        return path
