import os

from kurapinn.configs.utils.resolve_path import resolve_path

OUT_DIR_ENV = "KURAPINN_OUT_DIR"
FALLBACK_OUT_DIR = "kurapinn-out"


def default_out_dir() -> str:
    return resolve_path(os.environ.get(OUT_DIR_ENV) or FALLBACK_OUT_DIR)
