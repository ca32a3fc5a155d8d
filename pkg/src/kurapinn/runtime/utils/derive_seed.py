import hashlib


def derive_seed(base_seed: int, label: str) -> int:
    """A non-negative seed derived from `base_seed` and a label, stable across runs."""
    digest = hashlib.blake2b(
        f"{base_seed}:{label}".encode("utf-8"), digest_size=8
    ).digest()
    # Fits in a signed 64-bit column
    return int.from_bytes(digest, "little") & (2**63 - 1)
