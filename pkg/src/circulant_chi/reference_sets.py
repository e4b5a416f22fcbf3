"""Published connection sets with vanishing reduced Euler characteristic.

Transcribed by hand, one class per entry, for n = 30 (46 entries) and
n = 36 (8 entries).  Representatives are as published, so they need not be
the lexicographically least member of their multiplier class; compare by
orbit membership only.
"""

ZERO_CHI_SETS: dict[int, tuple[tuple[int, ...], ...]] = {
    30: (
        # first column
        (1, 3, 8), (2, 9, 13), (8, 9, 13), (1, 8, 9, 14), (2, 3, 11, 13),
        (3, 8, 11, 13), (1, 3, 4, 13), (7, 8, 9, 13), (1, 4, 7, 9), (1, 8, 9, 11),
        (2, 9, 11, 14), (1, 2, 9, 13), (2, 3, 7, 9), (1, 7, 8, 9, 11), (1, 3, 7, 8, 13),
        (2, 3, 4, 7, 8),
        # second column
        (1, 7, 9, 11, 14), (1, 4, 9, 13, 14), (2, 3, 7, 8, 9), (1, 3, 4, 9, 11),
        (2, 7, 8, 9, 13), (2, 3, 4, 7, 13), (1, 3, 4, 5, 7, 8), (2, 3, 4, 5, 8, 11),
        (1, 2, 3, 8, 9, 11), (1, 3, 4, 7, 9, 13), (1, 4, 7, 9, 11, 14), (1, 2, 3, 5, 11, 14),
        (1, 3, 4, 9, 11, 14), (2, 3, 4, 7, 8, 13), (1, 2, 5, 7, 9, 13, 14), (1, 4, 5, 7, 8, 9, 11),
        # third column
        (1, 2, 3, 7, 9, 11, 13), (2, 3, 4, 5, 7, 9, 14), (2, 3, 4, 5, 8, 9, 14),
        (1, 3, 4, 5, 7, 8, 14), (2, 3, 4, 5, 8, 11, 13), (1, 2, 3, 7, 8, 9, 11, 13),
        (2, 3, 5, 8, 9, 11, 13, 14), (1, 2, 3, 4, 5, 8, 9, 14), (1, 2, 3, 5, 7, 9, 11, 14),
        (2, 3, 4, 5, 7, 9, 13, 14), (1, 3, 4, 5, 7, 8, 9, 11, 13), (1, 2, 3, 4, 5, 8, 9, 11, 13),
        (2, 3, 4, 5, 7, 8, 9, 13, 14), (1, 2, 3, 4, 5, 7, 9, 11, 13, 14),
    ),
    36: (
        (2, 3, 6, 7, 10, 14, 15), (2, 5, 6, 7, 10, 11, 14), (2, 5, 6, 10, 11, 13, 14),
        (1, 2, 5, 6, 7, 10, 11, 17), (1, 5, 6, 7, 11, 13, 14, 17), (2, 5, 6, 7, 10, 14, 15, 17),
        (1, 2, 5, 6, 7, 10, 11, 13), (1, 5, 6, 7, 10, 11, 13, 14, 17),
    ),
}
