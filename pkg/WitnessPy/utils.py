"""Module contains shared utility functions and typing aliases."""
import os
import sys
from typing import IO, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
from prompt_toolkit import print_formatted_text
from prompt_toolkit.formatted_text import FormattedText
from prompt_toolkit.styles import Style

from WitnessPy.exceptions import InvalidArgument

__all__ = [
    "get_style",
    "get_workers",
    "WitnessPyStyle",
    "color_print",
    "as_complex_vector",
]

WitnessPyVector = Union[Sequence[complex], np.ndarray]
WitnessPyIndex = Tuple[int, int]
WitnessPyJSON = Dict[str, object]


class WitnessPyStyle(NamedTuple):
    """`WitnessPy` Style class.

    Used as a helper class to enforce the method `get_style` to be used
    while also avoiding :class:`dict` to be passed into :func:`.color_print`.

    Note:
        The class is an instance of :class:`typing.NamedTuple`.

    Warning:
        You should not directly be using this class besides for type hinting
        purposes. Obtain an instance of this class using :func:`.get_style`.
    """

    dict: Dict[str, str]


def get_style(
    style: Optional[Dict[str, str]] = None, style_override: bool = True
) -> WitnessPyStyle:
    """Obtain an :class:`.WitnessPyStyle` instance for the terminal summaries printed by the CLI.

    Tip:
        This function supports ENV variables.

        Every class can be set through `WITNESSPY_STYLE_<CLASS>`, e.g. `WITNESSPY_STYLE_ENTANGLED`.

    Note:
        Priority: style parameter -> ENV variable -> default style

    Args:
        style: The dictionary of style classes and their colors. If nothing is passed, the default palette is used.
        style_override: A boolean to determine if the supplied `style` parameter should be merged with the
            default palette or override it.

    Returns:
        An instance of :class:`.WitnessPyStyle`.

    Examples:
        >>> style = get_style({"entangled": "#ff0000"}, style_override=False)
        >>> color_print([("class:entangled", "entangled")], style=style.dict)
    """
    if not style_override or style is None:
        if not style:
            style = {}
        result = {
            "label": os.getenv("WITNESSPY_STYLE_LABEL", "#abb2bf"),
            "value": os.getenv("WITNESSPY_STYLE_VALUE", "#61afef"),
            "path": os.getenv("WITNESSPY_STYLE_PATH", "#c678dd"),
            "entangled": os.getenv("WITNESSPY_STYLE_ENTANGLED", "#98c379"),
            "undetected": os.getenv("WITNESSPY_STYLE_UNDETECTED", "#e5c07b"),
            "failure": os.getenv("WITNESSPY_STYLE_FAILURE", "#e06c75"),
            **style,
        }
    else:
        result = {
            "label": os.getenv("WITNESSPY_STYLE_LABEL", ""),
            "value": os.getenv("WITNESSPY_STYLE_VALUE", ""),
            "path": os.getenv("WITNESSPY_STYLE_PATH", ""),
            "entangled": os.getenv("WITNESSPY_STYLE_ENTANGLED", ""),
            "undetected": os.getenv("WITNESSPY_STYLE_UNDETECTED", ""),
            "failure": os.getenv("WITNESSPY_STYLE_FAILURE", ""),
            **style,
        }
    return WitnessPyStyle(result)


def get_workers(workers: Optional[int] = None) -> int:
    """Resolve the number of worker threads used by grid scans and see-saw restarts.

    Note:
        Priority: workers parameter -> `WITNESSPY_WORKERS` ENV variable -> `min(8, cpu_count)`

    Args:
        workers: Explicit worker count.

    Returns:
        A positive worker count.

    Raises:
        InvalidArgument: The resolved value is not a positive integer.
    """
    if workers is None:
        raw = os.getenv("WITNESSPY_WORKERS")
        if raw is None:
            return min(8, os.cpu_count() or 1)
        try:
            workers = int(raw)
        except ValueError:
            raise InvalidArgument("WITNESSPY_WORKERS needs to be an integer")
    if workers < 1:
        raise InvalidArgument("worker count needs to be at least 1")
    return workers


def as_complex_vector(vector: WitnessPyVector, size: Optional[int] = None) -> np.ndarray:
    """Convert `vector` into a flat complex :class:`numpy.ndarray`.

    Args:
        vector: Any sequence of numbers.
        size: Expected length, unchecked when None.

    Returns:
        A one dimensional complex array.

    Raises:
        InvalidArgument: The input is not one dimensional or has the wrong length.
    """
    result = np.asarray(vector, dtype=complex)
    if result.ndim != 1:
        raise InvalidArgument("vector needs to be one dimensional")
    if size is not None and result.shape[0] != size:
        raise InvalidArgument(f"vector needs {size} entries, got {result.shape[0]}")
    return result


def color_print(
    formatted_text: List[Tuple[str, str]],
    style: Optional[Dict[str, str]] = None,
    file: Optional[IO[str]] = None,
) -> None:
    """Print colored text leveraging :func:`~prompt_toolkit.shortcuts.print_formatted_text`.

    Styling is skipped entirely when `WITNESSPY_NO_COLOR` is set.

    Args:
        formatted_text: A list of formatted_text.
        style: Style to apply to `formatted_text` in :class:`dictionary` form.
        file: Stream to print to, defaults to stderr so that stdout stays machine readable.

    Example:
        >>> color_print(formatted_text=[("class:label", "margin "), ("class:value", "2.1e-05")], style={"label": "#abb2bf"})
    """
    if os.getenv("WITNESSPY_NO_COLOR"):
        formatted_text = [("", text) for _, text in formatted_text]
        style = None
    print_formatted_text(
        FormattedText(formatted_text),
        style=Style.from_dict(style) if style else None,
        file=file or sys.stderr,
    )
