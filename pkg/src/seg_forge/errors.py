"""Exception types shared across the package.

The CLI maps these onto its documented exit codes: ConfigError -> 2,
I/O-flavoured errors (image decoding, checkpoints, dataset layout,
CSV parsing) -> 3, NonFiniteLossError -> 4.
"""


class SegForgeError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(SegForgeError):
    """Tensor or image shapes are incompatible with the requested operation."""


class ConfigError(SegForgeError):
    """A configuration value violates its invariants."""


class DataError(SegForgeError):
    """A dataset directory or sample cannot be ingested."""


class ImageDecodeError(SegForgeError):
    """The file exists but is not a decodable PNG."""


class UnsupportedImageError(SegForgeError):
    """The PNG decodes but uses a bit depth or mode outside the contract."""


class TapeConsumedError(SegForgeError):
    """backward() was called a second time on the same tape."""


class MissingGradError(SegForgeError):
    """An optimizer step found a parameter with no populated gradient."""

    def __init__(self, name: str):
        super().__init__(f"parameter {name!r} has no gradient; "
                         "run backward before stepping")
        self.name = name


class NonFiniteLossError(SegForgeError):
    """Training produced a NaN/Inf loss and was aborted."""

    def __init__(self, step: int, value: float):
        super().__init__(f"non-finite loss {value!r} at optimizer step {step}")
        self.step = step
        self.value = value


class CheckpointError(SegForgeError):
    """Base class for checkpoint read/write failures."""


class CheckpointVersionError(CheckpointError):
    """Magic string or format version does not match this writer."""


class CheckpointTruncatedError(CheckpointError):
    """The file ended before all declared records were read."""


class NameSetMismatchError(CheckpointError):
    """Checkpoint parameter names do not match the requesting config."""


class CsvFormatError(SegForgeError):
    """A metrics CSV row could not be parsed."""

    def __init__(self, row: int, reason: str):
        super().__init__(f"metrics CSV row {row}: {reason}")
        self.row = row
