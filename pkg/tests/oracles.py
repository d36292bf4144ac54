"""Independent brute-force oracles.

Each oracle re-derives expected behavior from first principles (naive
scans, manual arithmetic) without touching the implementation paths it
checks.
"""

from __future__ import annotations


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def brute_force_find_matches(text: str, keys) -> list[tuple[int, int, str]]:
    """Every (position, key) pair tested by direct character comparison,
    boundary-checked, then reduced with the longest-then-leftmost rule.

    Returns (start, end, canonical_key) triples sorted by start.
    """
    candidates = []
    for key in keys:
        folded = key.lower()
        width = len(key)
        if width == 0:
            continue
        for start in range(len(text) - width + 1):
            if text[start:start + width].lower() != folded:
                continue
            if start > 0 and _is_word_char(text[start - 1]):
                continue
            end = start + width
            if end < len(text) and _is_word_char(text[end]):
                continue
            candidates.append((start, end, key))
    candidates.sort(key=lambda c: (-(c[1] - c[0]), c[0]))
    chosen: list[tuple[int, int, str]] = []
    for start, end, key in candidates:
        if all(end <= s or start >= e for s, e, _ in chosen):
            chosen.append((start, end, key))
    chosen.sort()
    return chosen


def brute_force_stats(samples) -> dict[str, float]:
    """Descriptive statistics by manual arithmetic (sample sd, n-1)."""
    values = sorted(samples)
    n = len(values)
    if n == 0:
        raise ValueError("empty sample")
    mean = sum(values) / n
    if n % 2 == 1:
        median = values[n // 2]
    else:
        median = (values[n // 2 - 1] + values[n // 2]) / 2
    if n == 1:
        sd = 0.0
    else:
        sd = (sum((v - mean) ** 2 for v in values) / (n - 1)) ** 0.5
    return {
        "n": n,
        "mean": mean,
        "median": median,
        "sd": sd,
        "min": values[0],
        "max": values[-1],
        "range": values[-1] - values[0],
    }


def expected_removed_elements(tree, selectors) -> set[int]:
    """ids of elements that sanitize must drop: the element (or an ancestor)
    matches a selector, or it is (or sits under) a script/style element.

    Evaluated by walking every element and re-testing each selector
    directly, independent of the sanitizer's recursion.
    """
    from termtip.markup import Element, ROOT_TAG, iter_nodes

    removed: set[int] = set()

    def direct_hit(el) -> bool:
        return el.tag in ("script", "style") or any(sel.matches(el) for sel in selectors)

    def walk(el, doomed: bool) -> None:
        for child in el.children:
            if isinstance(child, Element):
                child_doomed = doomed or direct_hit(child)
                if child_doomed:
                    removed.add(id(child))
                walk(child, child_doomed)

    walk(tree.root, False)
    return removed
