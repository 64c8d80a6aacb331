import argparse
from types import SimpleNamespace

import pytest

from SPD_Kmeans.commands import inputs
from SPD_Kmeans.commands import parser_builder
from SPD_Kmeans.commands.argparse_errors import CliParseError, ParseErrorKind
from SPD_Kmeans.commands.result_bridge import wrap_handler_for_exit_code
from SPD_Kmeans.commands.smart_parser import SmartArgumentParser, normalize_negative_option_values
from SPD_Kmeans.SPD_utils.src.spd.errors import DimensionMismatch, InvalidParameter, KExceedsN


class RecordingParser(argparse.ArgumentParser):
    pass


def make_command(name="demo", args=None, handler=True):
    command = SimpleNamespace(
        COMMAND=SimpleNamespace(
            name=name,
            help=f"{name} help",
            description="",
            args=args or [],
        )
    )
    if handler:
        command.cli_handler = lambda parsed: parsed
    return command


def test_register_simple_subcommand_adds_flags_and_handler(monkeypatch):
    wrapped_handlers = []

    def fake_wrap(cmd):
        wrapped_handlers.append(cmd)
        return f"wrapped:{cmd.COMMAND.name}"

    monkeypatch.setattr(parser_builder, "wrap_handler_for_exit_code", fake_wrap)

    parser = argparse.ArgumentParser()
    subparsers = parser.add_subparsers(dest="command")
    command = make_command(
        args=[
            {"flags": ["--lag"], "type": int, "required": True},
            {"flags": ["--patch"], "type": int, "default": 1},
        ]
    )

    parser_builder.register_simple_subcommand(subparsers, command)
    parsed = parser.parse_args(["demo", "--lag", "3"])

    assert parsed.command == "demo"
    assert parsed.lag == 3
    assert parsed.patch == 1
    assert parsed.handler == "wrapped:demo"
    assert wrapped_handlers == [command]


def test_register_simple_subcommand_without_handler_only_registers_arguments():
    parser = argparse.ArgumentParser()
    subparsers = parser.add_subparsers(dest="command")
    command = make_command(handler=False)

    parser_builder.register_simple_subcommand(subparsers, command)
    parsed = parser.parse_args(["demo"])

    assert parsed.command == "demo"
    assert not hasattr(parsed, "handler")


def test_build_subparser_uses_parent_parser_class(monkeypatch):
    monkeypatch.setattr(
        parser_builder,
        "wrap_handler_for_exit_code",
        lambda cmd: f"handler:{cmd.COMMAND.name}",
    )

    first = make_command(name="first", args=[{"flags": ["--value"], "default": "x"}])
    second = make_command(name="second")
    package = SimpleNamespace(
        PARSER=SimpleNamespace(
            dest="root_command",
            help="root commands",
            args={"commands": [first, second]},
        )
    )

    parser = RecordingParser()
    returned = parser_builder.build_subparser(parser, package)
    parsed = parser.parse_args(["first", "--value", "42"])

    assert returned is parser
    assert parsed.root_command == "first"
    assert parsed.value == "42"
    assert parsed.handler == "handler:first"
    assert isinstance(parser._subparsers._group_actions[0].choices["second"], RecordingParser)



@pytest.mark.parametrize(
    "exc, code",
    [
        (DimensionMismatch("shapes differ"), 2),
        (InvalidParameter("lag too large"), 3),
        (KExceedsN("k=5 exceeds n=3"), 4),
        (FileNotFoundError("missing.spdk"), 2),
    ],
)
def test_wrapped_handler_maps_errors_to_exit_codes(exc, code, capsys):
    def _raise(args):
        raise exc

    command = SimpleNamespace(COMMAND=SimpleNamespace(name="cluster"), cli_handler=_raise)
    assert wrap_handler_for_exit_code(command)(argparse.Namespace()) == code
    err = capsys.readouterr().err
    assert err.startswith("SPD_Kmeans cluster: error: ")


def test_wrapped_handler_returns_zero_on_success():
    command = SimpleNamespace(COMMAND=SimpleNamespace(name="demo"), cli_handler=lambda args: None)
    assert wrap_handler_for_exit_code(command)(argparse.Namespace()) == 0


def test_wrapped_handler_lets_programming_errors_through():
    def _raise(args):
        raise KeyError("bug")

    command = SimpleNamespace(COMMAND=SimpleNamespace(name="demo"), cli_handler=_raise)
    with pytest.raises(KeyError):
        wrap_handler_for_exit_code(command)(argparse.Namespace())


def test_smart_parser_raises_classified_errors():
    parser = SmartArgumentParser(prog="x", argv=["--k"])
    parser.add_argument("--k", type=int, required=True)
    with pytest.raises(CliParseError) as info:
        parser.parse_args([])
    assert info.value.kind == ParseErrorKind.MISSING_REQUIRED
    assert info.value.status == 2

    with pytest.raises(CliParseError) as info:
        parser.parse_args(["--k", "two"])
    assert info.value.kind == ParseErrorKind.INVALID_VALUE


def test_negative_option_values_are_attached():
    parser = SmartArgumentParser(prog="x")
    parser.add_argument("--jitter", type=float)
    assert normalize_negative_option_values(parser, ["--jitter", "-1e-3"]) == ["--jitter=-1e-3"]
    assert parser.parse_args(["--jitter", "-2"]).jitter == -2.0


def test_int_list_parses_and_rejects():
    assert inputs.int_list("1, 2,4") == [1, 2, 4]
    with pytest.raises(argparse.ArgumentTypeError):
        inputs.int_list(" , ")
    with pytest.raises(argparse.ArgumentTypeError):
        inputs.int_list("1,x")


def test_named_paths_require_existing_files(tmp_path):
    cc = tmp_path / "cc.spdk"
    vh = tmp_path / "vh.spdk"
    cc.write_bytes(b"")
    vh.write_bytes(b"")

    assert inputs.named_path(f"CC={cc}") == ("CC", cc)
    assert inputs.named_paths(f"CC={cc},VH={vh}") == {"CC": cc, "VH": vh}
    with pytest.raises(argparse.ArgumentTypeError):
        inputs.named_path(str(cc))
    with pytest.raises(argparse.ArgumentTypeError):
        inputs.named_path(f"CC={tmp_path / 'missing.spdk'}")


def test_resolve_seed_reads_environment(monkeypatch):
    assert inputs.resolve_seed(5) == 5
    assert inputs.resolve_seed(None) == 0
    monkeypatch.setenv("SPD_KMEANS_SEED", "42")
    assert inputs.resolve_seed(None) == 42
    monkeypatch.setenv("SPD_KMEANS_SEED", "forty-two")
    with pytest.raises(InvalidParameter):
        inputs.resolve_seed(None)


def test_command_params_drops_dispatch_entries(tmp_path):
    args = argparse.Namespace(command="cluster", handler=print, verbose=True, log_level="INFO", k=3, out=tmp_path)
    assert inputs.command_params(args, seed=1) == {"k": 3, "out": tmp_path, "seed": 1}


def test_sibling_path(tmp_path):
    assert inputs.sibling_path(tmp_path / "report.csv", ".anova.csv") == tmp_path / "report.anova.csv"
