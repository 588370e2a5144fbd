"""
Text helpers shared by the formatters.
"""

import textwrap
from typing import List


def wrap_text(text: str, width: int = 70, indent: int = 0) -> str:
    """
    Wrap text to a width, indenting every line.

    Paragraph breaks (newlines) in the input are preserved.

    Examples:
        >>> wrap_text("l12 != 0 and l13 != 0", width=12)
        'l12 != 0 and\\nl13 != 0'
        >>> wrap_text("E = (0, 1)", width=20, indent=2)
        '  E = (0, 1)'
    """
    if not text:
        return ""
    prefix = " " * indent
    usable = width - indent if width > indent else 20
    paragraphs = []
    for paragraph in text.split("\n"):
        if not paragraph.strip():
            paragraphs.append("")
            continue
        lines = textwrap.wrap(paragraph, width=usable, break_long_words=False, break_on_hyphens=False)
        paragraphs.append("\n".join(prefix + line for line in lines))
    return "\n".join(paragraphs)


def truncate_text(text: str, max_length: int, suffix: str = "...") -> str:
    """Cut text to max_length characters, ending with suffix when shortened."""
    if len(text) <= max_length:
        return text
    if max_length <= len(suffix):
        return suffix[:max_length]
    return text[: max_length - len(suffix)] + suffix


def bullet_lines(items: List[str], width: int = 70, indent: int = 2) -> List[str]:
    """Render items as wrapped "- item" lines."""
    lines = []
    for item in items:
        wrapped = wrap_text(item, width=width, indent=indent + 2)
        lines.append(" " * indent + "- " + wrapped.lstrip())
    return lines
