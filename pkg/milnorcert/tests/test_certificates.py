import pytest

from milnorcert.app.milnor.certificates import (
    PREDICATES,
    Certificate,
    Check,
    ReplayContext,
    Status,
    Theorem,
    evaluate,
)
from milnorcert.app.milnor.criteria import check_theorem1, check_theorem2, verify_certificate
from milnorcert.app.milnor.errors import CertificateMismatch
from milnorcert.app.milnor.families import two_line_joins


@pytest.fixture
def certificates(generic6, braid_lines):
    return [
        (generic6, check_theorem1(generic6, 3)),
        (generic6, check_theorem1(generic6, 2)),
        (generic6, check_theorem2(generic6, 2)),
        (generic6, check_theorem2(generic6, 5)),
        (braid_lines, check_theorem1(braid_lines, 3)),
        (braid_lines, check_theorem2(braid_lines, 3)),
    ]


def test_every_certificate_replays(certificates):
    for arrangement, cert in certificates:
        assert verify_certificate(arrangement, cert), (cert.checker, cert.m)


def test_branch_certificate_replays():
    joins = two_line_joins(4, 2)
    cert = check_theorem1(joins, 4)
    assert cert.theorem is Theorem.t1_branch2
    assert verify_certificate(joins, cert)


def test_json_round_trip(certificates):
    for arrangement, cert in certificates:
        again = Certificate.model_validate_json(cert.model_dump_json())
        assert again == cert
        assert verify_certificate(arrangement, again)


def test_wrong_arrangement(generic6, braid_lines):
    cert = check_theorem1(generic6, 3)
    with pytest.raises(CertificateMismatch):
        verify_certificate(braid_lines, cert)


def test_flipped_check_fails(generic6):
    cert = check_theorem2(generic6, 2)
    checks = [c.model_copy(update={"result": not c.result}) if c.predicate == "witness" else c for c in cert.checks]
    assert not verify_certificate(generic6, cert.model_copy(update={"checks": checks}))


def test_forged_partition_fails(generic6):
    cert = check_theorem1(generic6, 3)
    forged = cert.model_copy(update={"partition": [[0, 1, 2], [3, 4]]})
    assert not verify_certificate(generic6, forged)


def test_missing_witness_fails(generic6):
    cert = check_theorem2(generic6, 2)
    forged = cert.model_copy(update={"witnesses": cert.witnesses[1:]})
    assert not verify_certificate(generic6, forged)


def test_forged_inconclusive_fails(generic6):
    forged = Certificate(
        arrangement_hash=generic6.content_hash,
        m=3,
        checker="T1",
        status=Status.inconclusive,
        checks=[Check(predicate="divides", args={"m": 3, "d": 6}, result=True)],
    )
    assert not verify_certificate(generic6, forged)


def test_claim_without_proof_fails(braid_lines):
    forged = Certificate(
        arrangement_hash=braid_lines.content_hash,
        m=3,
        checker="T1",
        status=Status.vanishes,
        theorem=Theorem.t1_connected,
        removed_index=5,
        partition=[[0, 1, 2, 3, 4]],
        checks=[
            Check(predicate="divides", args={"m": 3, "d": 6}, result=True),
            Check(predicate="partition", args={"removed": 5, "components": [[0, 1, 2, 3, 4]]}, result=True),
        ],
    )
    assert not verify_certificate(braid_lines, forged)


def test_unknown_predicates_do_not_replay(generic6):
    ctx = ReplayContext.build(generic6, 3)
    assert evaluate(ctx, Check(predicate="trust_me", result=True)) is None
    assert evaluate(ctx, Check(predicate="divides", args={"m": 3}, result=True)) is None
    assert evaluate(ctx, Check(predicate="divides", args={"m": 3, "d": 6}, result=True)) is True
    assert evaluate(ctx, Check(predicate="divides", args={"m": 2, "d": 6}, result=True)) is False

    cert = check_theorem1(generic6, 3)
    tampered = cert.model_copy(update={"checks": cert.checks + [Check(predicate="trust_me", result=True)]})
    assert not verify_certificate(generic6, tampered)


def test_predicate_registry():
    assert set(PREDICATES) == {
        "divides",
        "component_count",
        "partition",
        "singletons",
        "rank_le_2",
        "essential",
        "witness",
        "witness_search",
        "nonvanishing_guaranteed",
    }


def test_certificate_fields(generic6):
    cert = check_theorem1(generic6, 3)
    assert cert.arrangement_hash == generic6.content_hash
    assert cert.tool_version
    assert [c.predicate for c in cert.checks] == ["divides", "partition"]
    assert cert.check("partition")[0].args["removed"] == 5
