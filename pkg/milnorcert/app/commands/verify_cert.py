from pathlib import Path

from pydantic import ValidationError

from ..logging_utils import get_logger
from ..milnor.certificates import Certificate
from ..milnor.criteria import verify_certificate
from ..milnor.errors import CertificateMismatch
from ..schemas import RunConfig, VerifyReport
from . import EXIT_INCONCLUSIVE, EXIT_OK, emit, read_arrangement

logger = get_logger()


def run(cfg: RunConfig) -> int:
    arrangement = read_arrangement(cfg.input)
    try:
        cert = Certificate.model_validate_json(Path(cfg.certificate).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ValueError(f"cannot read certificate {cfg.certificate}: {exc}") from exc
    except ValidationError as exc:
        raise ValueError(f"malformed certificate {cfg.certificate}: {exc}") from exc

    try:
        verified = verify_certificate(arrangement, cert)
    except CertificateMismatch as exc:
        logger.error("verify-cert: MISMATCH | %s", exc)
        verified = False
    logger.info(
        "verify-cert: %s | m=%d checker=%s status=%s",
        "PASSED" if verified else "FAILED",
        cert.m,
        cert.checker.value,
        cert.status.value,
    )
    emit(
        VerifyReport(
            arrangement_hash=arrangement.content_hash,
            m=cert.m,
            checker=cert.checker,
            status=cert.status,
            theorem=cert.theorem,
            verified=verified,
        ),
        cfg.output,
    )
    return EXIT_OK if verified else EXIT_INCONCLUSIVE
