"""Command-line pipeline: the three roles as subcommands.

* ``pbcap pap keygen|compile`` -- administrator: keys and policy
  compilation (trapdoors out, keywords dropped).
* ``pbcap user keygen|tag``    -- file owner: keys and tagged submissions.
* ``pbcap pdp classify``       -- decision/enforcement point: test tags
  against compiled policies and route payloads into storage units.
* ``pbcap harness run``        -- the distinguishing-game simulator.

Exit codes for ``pdp classify``: 0 any successful routing (including
unclassified), 2 authentication failure (payload not stored), 3 decode
error.
"""

from __future__ import annotations

import json
import random
import secrets
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import formats, game, policy, scheme
from .errors import DecodeError, PbcapError
from .pairing import get_suite
from .provenance import extract_fragments, parse_graph
from .storage import StorageLayout

EXIT_AUTH_FAILURE = 2
EXIT_DECODE_ERROR = 3

suite_option = click.option(
    "--suite", "suite_name", type=click.Choice(["production", "mock"]),
    default="production", show_default=True, help="Bilinear suite to use.",
)
seed_option = click.option(
    "--seed", type=int, default=None,
    help="Deterministic rng seed (mock/test use only).",
)
force_option = click.option(
    "--force", is_flag=True, help="Overwrite existing output files.",
)


def _make_rng(seed: int | None, suite_name: str):
    if seed is None:
        return secrets.SystemRandom()
    if suite_name == "production":
        click.echo("warning: --seed with the production suite is for tests only", err=True)
    return random.Random(seed)


def _guard(path: Path, force: bool) -> None:
    if path.exists() and not force:
        raise click.ClickException(f"{path} exists; pass --force to overwrite")


@click.group()
def cli():
    """Classify encrypted files by searching their encrypted provenance."""


# --- PAP -----------------------------------------------------------------

@cli.group()
def pap():
    """Policy administration point."""


@pap.command("keygen")
@click.option("--out-dir", type=click.Path(path_type=Path), required=True)
@suite_option
@seed_option
@force_option
def pap_keygen(out_dir: Path, suite_name: str, seed: int | None, force: bool):
    """Generate the administrator key pair (admin.sk / admin.pk)."""
    suite = get_suite(suite_name)
    out_dir.mkdir(parents=True, exist_ok=True)
    sk_path, pk_path = out_dir / "admin.sk", out_dir / "admin.pk"
    _guard(sk_path, force)
    _guard(pk_path, force)
    pair = scheme.keygen_admin(suite, _make_rng(seed, suite_name))
    formats.save_admin_keypair(pair, suite, sk_path, pk_path)
    click.echo(f"wrote {sk_path} and {pk_path}")


@pap.command("compile")
@click.option("--policies", "policy_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--admin-sk", "sk_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
@suite_option
@force_option
def pap_compile(policy_path: Path, sk_path: Path, out_path: Path, suite_name: str, force: bool):
    """Compile a policy file into trapdoors (keywords are dropped)."""
    suite = get_suite(suite_name)
    _guard(out_path, force)
    try:
        policies = formats.load_policies(policy_path)
        admin_sk = formats.load_admin_secret(sk_path, suite)
        compiled = policy.compile_policies(policies, admin_sk, suite)
    except PbcapError as exc:
        raise click.ClickException(str(exc))
    formats.save_compiled_policies(compiled, suite, out_path)
    n_trapdoors = sum(len(p.trapdoors) for p in compiled)
    click.echo(f"compiled {len(compiled)} policies ({n_trapdoors} trapdoors) -> {out_path}")


# --- User ------------------------------------------------------------------

@cli.group()
def user():
    """File owner."""


@user.command("keygen")
@click.option("--out-dir", type=click.Path(path_type=Path), required=True)
@suite_option
@seed_option
@force_option
def user_keygen(out_dir: Path, suite_name: str, seed: int | None, force: bool):
    """Generate a user key pair (user.sk / user.pk)."""
    suite = get_suite(suite_name)
    out_dir.mkdir(parents=True, exist_ok=True)
    sk_path, pk_path = out_dir / "user.sk", out_dir / "user.pk"
    _guard(sk_path, force)
    _guard(pk_path, force)
    pair = scheme.keygen_user(suite, _make_rng(seed, suite_name))
    formats.save_user_keypair(pair, suite, sk_path, pk_path)
    click.echo(f"wrote {sk_path} and {pk_path}")


@user.command("tag")
@click.option("--graph", "graph_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--admin-pk", "admin_pk_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--user-sk", "user_sk_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--payload", "payload_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
@click.option("--file-id", default=None, help="Defaults to the payload file name.")
@suite_option
@seed_option
@force_option
def user_tag(graph_path, admin_pk_path, user_sk_path, payload_path, out_path,
             file_id, suite_name, seed, force):
    """Tag an (already encrypted) payload with its provenance fragments."""
    suite = get_suite(suite_name)
    _guard(out_path, force)
    rng = _make_rng(seed, suite_name)
    try:
        graph = parse_graph(graph_path.read_text(encoding="utf-8"))
        admin_pub = formats.load_admin_public(admin_pk_path, suite)
        user_sk = formats.load_user_secret(user_sk_path, suite)
    except PbcapError as exc:
        raise click.ClickException(str(exc))
    fragments = extract_fragments(graph)
    payload = payload_path.read_bytes()
    x = admin_pub.pk_b ** user_sk
    tags = tuple(
        scheme.make_tag(suite, admin_pub, user_sk, frag.canonical_bytes(), rng)
        for frag in fragments
    )
    sub = formats.Submission(
        file_id=file_id or payload_path.name,
        payload=payload,
        x=x,
        tags=tags,
    )
    formats.save_submission(sub, suite, out_path)
    click.echo(f"wrote {out_path} ({len(tags)} tags)")


# --- PDP / PEP ----------------------------------------------------------

@cli.group()
def pdp():
    """Policy decision + enforcement point."""


def _classify_one(suite, compiled, admin_pub, user_pub, layout, sub_path: Path):
    """Returns (decision | None, exit_code)."""
    try:
        sub = formats.load_submission(sub_path, suite)
        decision = policy.classify(
            list(sub.tags), user_pub, admin_pub, compiled, suite,
            file_id=sub.file_id, x=sub.x,
        )
    except PbcapError as exc:
        click.echo(f"{sub_path}: decode error: {exc}", err=True)
        return None, EXIT_DECODE_ERROR
    if not decision.authenticated:
        layout.log(decision)
        click.echo(f"{sub_path}: authentication failure; payload not stored", err=True)
        return decision, EXIT_AUTH_FAILURE
    layout.store(decision, sub.payload)
    click.echo(json.dumps({
        "file_id": decision.file_id,
        "matched_policy": decision.matched_policy,
        "category": decision.category,
        "storage_unit": decision.storage_unit,
    }, sort_keys=True))
    return decision, 0


@pdp.command("classify")
@click.argument("submissions", type=click.Path(path_type=Path, exists=True), nargs=-1, required=True)
@click.option("--policies", "compiled_path", type=click.Path(path_type=Path, exists=True), required=True,
              help="Compiled policy file from `pap compile`.")
@click.option("--admin-pk", "admin_pk_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--user-pk", "user_pk_path", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--storage-root", envvar="PBCAP_STORAGE_ROOT",
              type=click.Path(path_type=Path, exists=True, file_okay=False), required=True)
@click.option("--parallel", type=int, default=1, show_default=True,
              help="Classify submissions concurrently.")
@suite_option
def pdp_classify(submissions, compiled_path, admin_pk_path, user_pk_path,
                 storage_root, parallel, suite_name):
    """Test submissions against compiled policies and route the payloads."""
    suite = get_suite(suite_name)
    try:
        compiled = formats.load_compiled_policies(compiled_path, suite)
        admin_pub = formats.load_admin_public(admin_pk_path, suite)
        user_pub = formats.load_user_public(user_pk_path, suite)
        layout = StorageLayout(storage_root)
    except PbcapError as exc:
        click.echo(f"decode error: {exc}", err=True)
        sys.exit(EXIT_DECODE_ERROR)

    def work(path):
        return _classify_one(suite, compiled, admin_pub, user_pub, layout, path)

    if parallel > 1 and len(submissions) > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(work, submissions))
    else:
        results = [work(path) for path in submissions]

    exit_code = max((code for _, code in results), default=0)
    sys.exit(exit_code)


# --- harness ---------------------------------------------------------------

@cli.group()
def harness():
    """Security-game simulation."""


@harness.command("run")
@click.option("--attacker", "attacker_name", type=click.Choice(sorted(game.ATTACKERS)),
              default="random-guess", show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@seed_option
@suite_option
def harness_run(attacker_name: str, trials: int, seed: int | None, suite_name: str):
    """Run the distinguishing game and print a transcript report."""
    suite = get_suite(suite_name)
    rng = random.Random(seed) if seed is not None else random.Random(secrets.randbits(128))
    attacker = game.ATTACKERS[attacker_name]()
    transcript = game.run_game(suite, attacker, trials, rng)
    click.echo(json.dumps(transcript.as_dict(), indent=2, sort_keys=True))


def main():
    cli()


if __name__ == "__main__":
    main()
