"""Tagged console output on stderr ([OK], [INFO], [WARN], [ERROR])."""

import click

_VERBOSITY = 1


def set_verbosity(level: int) -> None:
    """0 = errors only, 1 = normal, 2 = chatty."""
    global _VERBOSITY
    _VERBOSITY = level


def get_verbosity() -> int:
    return _VERBOSITY


def info(message: str) -> None:
    if _VERBOSITY >= 2:
        click.secho(f"[INFO] {message}", err=True)


def ok(message: str) -> None:
    if _VERBOSITY >= 1:
        click.secho(f"[OK] {message}", fg="green", err=True)


def warn(message: str) -> None:
    if _VERBOSITY >= 1:
        click.secho(f"[WARN] {message}", fg="yellow", err=True)


def error(message: str) -> None:
    click.secho(f"[ERROR] {message}", fg="red", err=True)
