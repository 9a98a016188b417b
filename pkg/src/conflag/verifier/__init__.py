from .sequence import SequenceReport, verify_labelled_sequence  # noqa: F401
