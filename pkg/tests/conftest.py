"""Shared test helpers."""


class CountingList(list):
    """List that tallies element reads and writes, for move-count audits."""

    def __init__(self, iterable=()):
        super().__init__(iterable)
        self.gets = 0
        self.sets = 0

    def __getitem__(self, i):
        self.gets += 1
        return super().__getitem__(i)

    def __setitem__(self, i, value):
        self.sets += 1
        super().__setitem__(i, value)
