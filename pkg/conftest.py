"""pytest hooks.

absltest.main() parses absl flags before running a suite. pytest does not, and
flagsaver and create_tempfile refuse to read unparsed flags.
"""
from absl import flags


def pytest_configure(config):
    del config  # Unused.
    flags.FLAGS.mark_as_parsed()
