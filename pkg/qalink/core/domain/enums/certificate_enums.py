# qalink/core/domain/enums/certificate_enums.py

from enum import Enum


class CertifyStatus(str, Enum):
    CERTIFIED = "CERTIFIED"
    UNKNOWN = "UNKNOWN"


class UnknownReason(str, Enum):
    """
    Why the search gave up. The certifier never concludes non-membership.
    """
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"
    NO_CERTIFICATE = "NO_CERTIFICATE"   # search space exhausted without a certificate
