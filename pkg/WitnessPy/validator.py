"""Module contains pre-built validators for command line values."""
import math
import os
from fractions import Fraction
from pathlib import Path
from typing import Optional

from prompt_toolkit.document import Document
from prompt_toolkit.validation import ValidationError, Validator

__all__ = [
    "NumberValidator",
    "IntegerValidator",
    "RationalValidator",
    "WritablePathValidator",
    "validate_text",
]


class NumberValidator(Validator):
    """:class:`~prompt_toolkit.validation.Validator` to validate if input is a finite number inside a range.

    Args:
        message: Error message to raise when validation failed.
        min_allowed: Lower bound, unchecked when None.
        max_allowed: Upper bound, unchecked when None.
        inclusive: Accept values equal to the bounds.
    """

    def __init__(
        self,
        message: str = "Input should be a number",
        min_allowed: Optional[float] = None,
        max_allowed: Optional[float] = None,
        inclusive: bool = False,
    ) -> None:
        self._message = message
        self._min = min_allowed
        self._max = max_allowed
        self._inclusive = inclusive

    def _in_range(self, value: float) -> bool:
        if self._min is not None:
            if value < self._min or (not self._inclusive and value == self._min):
                return False
        if self._max is not None:
            if value > self._max or (not self._inclusive and value == self._max):
                return False
        return True

    def validate(self, document) -> None:
        """Check if input is a finite number inside the configured range."""
        try:
            value = float(document.text)
        except ValueError:
            raise ValidationError(
                message=self._message, cursor_position=document.cursor_position
            )
        if not math.isfinite(value) or not self._in_range(value):
            raise ValidationError(
                message=self._message, cursor_position=document.cursor_position
            )


class IntegerValidator(Validator):
    """:class:`~prompt_toolkit.validation.Validator` to validate if input is an integer not below a minimum.

    Args:
        message: Error message to raise when validation failed.
        min_allowed: Smallest accepted value.
    """

    def __init__(
        self, message: str = "Input should be an integer", min_allowed: int = 0
    ) -> None:
        self._message = message
        self._min = min_allowed

    def validate(self, document) -> None:
        """Check if input is an integer and at least `min_allowed`."""
        try:
            value = int(document.text)
        except ValueError:
            raise ValidationError(
                message=self._message, cursor_position=document.cursor_position
            )
        if value < self._min:
            raise ValidationError(
                message=self._message, cursor_position=document.cursor_position
            )


class RationalValidator(Validator):
    """:class:`~prompt_toolkit.validation.Validator` to validate if input is an exact rational literal.

    Accepts anything :class:`fractions.Fraction` parses, e.g. `-13/20` or `-0.64191`.

    Args:
        message: Error message to raise when validation failed.
    """

    def __init__(self, message: str = "Input should be a rational number") -> None:
        self._message = message

    def validate(self, document) -> None:
        """Check if input parses as a :class:`fractions.Fraction`."""
        try:
            Fraction(document.text)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(
                message=self._message, cursor_position=document.cursor_position
            )


class WritablePathValidator(Validator):
    """:class:`~prompt_toolkit.validation.Validator` to validate if a file can be written at the input path.

    Args:
        message: Error message to raise when validation failed.
    """

    def __init__(self, message: str = "Output path is not writable") -> None:
        self._message = message

    def validate(self, document) -> None:
        """Check if the parent directory exists and is writable and the path is not a directory."""
        path = Path(document.text).expanduser()
        parent = path.parent if str(path.parent) else Path(".")
        if (
            not document.text
            or path.is_dir()
            or not parent.is_dir()
            or not os.access(parent, os.W_OK)
        ):
            raise ValidationError(
                message=self._message, cursor_position=document.cursor_position
            )


def validate_text(validator: Validator, text: str) -> None:
    """Run `validator` against a raw string outside of an interactive session.

    Args:
        validator: Any :class:`~prompt_toolkit.validation.Validator`.
        text: Value to validate.

    Raises:
        ValidationError: The value is rejected by `validator`.
    """
    validator.validate(Document(text))
