"""Command-line front end.

Results go to stdout as evidence files, warnings to stderr. Exit codes:
2 validation, 3 degenerate or zero credence, 4 partition mismatch.
"""

from __future__ import annotations

import sys

import click

from . import confirm, dutchbook, merge, repair, updating
from .core import BINARY, TOL_SUM, BinaryEvidence, Distribution
from .errors import PartitionMismatchError, ProbDynError, ValidationError
from .evidence_file import EvidenceFile, dumps, load


def _load_kind(path, kind):
    ef = load(path)
    if ef.kind != kind:
        raise ValidationError(f"{path}: expected a {kind!r} file, got {ef.kind!r}")
    return ef.payload


def _emit(ef: EvidenceFile) -> None:
    click.echo(dumps(ef), nl=False)


def _warn(msg: str) -> None:
    click.echo(f"warning: {msg}", err=True)


def _run(fn):
    try:
        fn()
    except ProbDynError as exc:
        click.echo(f"error [{exc.code}]: {exc}", err=True)
        sys.exit(exc.exit_code)


@click.group()
def main():
    """Merge, normalize and update credence-tagged probability evidence."""


@main.command("merge")
@click.argument("files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["spd", "opd"]), default="spd", show_default=True)
def merge_cmd(files, mode):
    """Merge the evidences of all FILES (straight or offsetting)."""

    def run():
        evidences = []
        for path in files:
            evidences.extend(_load_kind(path, "evidences"))
        partition = evidences[0].partition
        for e in evidences:
            if e.partition != partition:
                raise PartitionMismatchError(f"partitions differ: {partition.labels} vs {e.partition.labels}")
        if mode == "spd":
            _emit(EvidenceFile("evidences", (merge.spd_merge(evidences),)))
            return
        if len(partition) != 2:
            raise ValidationError("offsetting mergers need binary evidences")
        binaries = [BinaryEvidence.from_alpha(e) for e in evidences]
        report = merge.accord(binaries)
        merged = merge.opd_merge(binaries)
        if report.clamped:
            _warn("accord clamped into [0, 1]")
        if merged.credence <= TOL_SUM:
            _warn("offsetting merger has zero credence: the evidences cancel out")
        _emit(
            EvidenceFile(
                "evidences",
                (merged.to_alpha(partition),),
                {"pbar": report.pbar, "sigma": report.sigma, "lambda": report.lam},
            )
        )

    _run(run)


@main.command("normalize")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def normalize_cmd(file):
    """Normalize a weighted_set file into one evidence."""
    _run(lambda: _emit(EvidenceFile("evidences", (merge.normalize(_load_kind(file, "weighted_set")),))))


@main.command("update")
@click.argument("prior", type=click.Path(exists=True, dir_okay=False))
@click.argument("evidence", type=click.Path(exists=True, dir_okay=False))
@click.option("--jeffrey/--pd", "jeffrey", default=False, help="Jeffrey's rule or credence-aware update (default).")
def update_cmd(prior, evidence, jeffrey):
    """Update P(A) of a joint PRIOR by EVIDENCE on its B-partition."""

    def run():
        joint = _load_kind(prior, "joint")
        evidences = _load_kind(evidence, "evidences")
        if jeffrey:
            if len(evidences) != 1:
                raise ValidationError("--jeffrey takes exactly one evidence")
            _emit(EvidenceFile(None, None, {"probability": updating.jeffrey_update(joint, evidences[0].dist)}))
            return
        result = updating.pd_sequential_update(joint, evidences)
        if result.updated.credence <= TOL_SUM:
            _warn("update carries zero credence")
        _emit(
            EvidenceFile(
                "evidences",
                (result.updated.to_alpha(BINARY),),
                {
                    "per_cell_credences": list(result.per_cell_credences),
                    "normalized_weights": list(result.normalized_weights.probs),
                    "correlations": list(result.correlations),
                },
            )
        )

    _run(run)


def _parse_constraint(text: str, beta: repair.ContingencyEvidence) -> repair.ImplicationConstraint:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValidationError(f"constraint {text!r} is not COLUMN:CREDENCE[:P]")
    label = parts[0]
    column = beta.b_partition.index(label)
    try:
        nums = [float(x) for x in parts[1:]]
    except ValueError:
        raise ValidationError(f"constraint {text!r} has a non-numeric field") from None
    return repair.ImplicationConstraint(nums[0], column, nums[1] if len(nums) == 3 else 1.0)


@main.command("repair")
@click.argument("beta", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--constraint",
    "constraints",
    multiple=True,
    required=True,
    metavar="COLUMN:CREDENCE[:P]",
    help="Impose 'A implies COLUMN' with the given credence and truth probability.",
)
def repair_cmd(beta, constraints):
    """Impose implication constraints on a contingency evidence."""

    def run():
        ev = _load_kind(beta, "contingency")
        cs = [_parse_constraint(t, ev) for t in constraints]
        if len(cs) == 1:
            c = cs[0]
            out = repair.impose_constraint(ev, c)
            top = ev.table[0]
            i = c.target_column
            a, c_ = top[i], ev.table[1][i]
            b = sum(x for j, x in enumerate(top) if j != i)
            report = {
                "path": "single",
                "conditional": repair.repaired_conditional(a, b, c_, c.effective_credence / ev.credence),
            }
        else:
            out = repair.impose_constraints(ev, cs)
            report = {"path": "multiple"}
        report["column_conditionals"] = {
            ev.b_partition.labels[c.target_column]: repair.column_conditional(out, c.target_column) for c in cs
        }
        _emit(EvidenceFile("contingency", out, report))

    _run(run)


@main.command("confirm")
@click.argument("prior", type=click.Path(exists=True, dir_okay=False))
@click.argument("evidence", type=click.Path(exists=True, dir_okay=False))
@click.option("--straight/--offsetting", "straight", default=True)
def confirm_cmd(prior, evidence, straight):
    """Degrees of confirmation of A by binary EVIDENCE on B."""

    def run():
        joint = _load_kind(prior, "joint")
        evidences = _load_kind(evidence, "evidences")
        if len(evidences) != 1 or len(evidences[0].partition) != 2:
            raise ValidationError("confirm takes exactly one binary evidence")
        if evidences[0].partition != joint.b_partition:
            raise PartitionMismatchError("evidence partition does not match the prior's columns")
        rep = confirm.pdct_confirmation(
            joint, BinaryEvidence.from_alpha(evidences[0]), "straight" if straight else "offsetting"
        )
        if rep.clamped:
            _warn("accord clamped into [0, 1]")
        _emit(
            EvidenceFile(
                None,
                None,
                {
                    "mode": rep.mode,
                    "first_order": rep.first_order,
                    "credence_gain": rep.credence_gain,
                    "probability_gain": rep.probability_gain,
                    "pdct": rep.pdct,
                    "accord": rep.accord_used,
                },
            )
        )

    _run(run)


@main.command("dutchbook")
@click.argument("bet", type=click.Path(exists=True, dir_okay=False))
def dutchbook_cmd(bet):
    """Prices and outcome-wise losses of the three-bet scheme."""

    def run():
        scenario = _load_kind(bet, "bet")
        out = dutchbook.evaluate_bets(scenario)
        _emit(
            EvidenceFile(
                "bet",
                scenario,
                {
                    "price_a": out.price_a,
                    "price_b": out.price_b,
                    "price_c": out.price_c,
                    "total_price": out.total_price,
                    "loss_if_not_b": out.loss_if_not_b,
                    "loss_if_b": out.loss_if_b,
                    "delta": out.delta,
                },
            )
        )

    _run(run)


if __name__ == "__main__":
    main()
