"""
SHA256 helpers: digests of written reports and deterministic seed derivation.
"""

import hashlib


def sha256_file(path: str, chunk_size: int = 1 << 20) -> str:
    """
    Digest of a written report, read in chunks.

    Args:
        path: The report file.
        chunk_size: Bytes per read.

    Returns:
        The hexadecimal SHA256 digest.
    """
    digest = hashlib.sha256()
    with open(path, 'rb') as f:
        while chunk := f.read(chunk_size):
            digest.update(chunk)
    return digest.hexdigest()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def derive_seed(seed: int, *key) -> int:
    """
    A 64-bit seed from a base seed and a key, stable across processes.

    Python's hash() is salted per process, so the key is hashed with sha256
    over the text "seed:part1:part2...".
    """
    return int(sha256_text(":".join([str(seed)] + [str(k) for k in key]))[:16], 16)
