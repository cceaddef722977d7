# -*- coding: utf-8 -*-
"""
Hypothesis strategies building random classes, curves and annotation-free objects
"""
from hypothesis import strategies as st

from curvegen.numerics import ChernPair, Curve
from curvegen.objects import FormalObject, SemistablePiece, Splitting

bundle_classes = st.builds(ChernPair, st.integers(1, 8), st.integers(-50, 50))
torsion_classes = st.builds(ChernPair, st.just(0), st.integers(1, 10))
classes = st.one_of(bundle_classes, torsion_classes)
curves = st.builds(Curve, st.integers(0, 10))

degrees = st.integers(-3, 3)


def _object(summands, hn_only=()):
    return FormalObject(summands, {d: Splitting.HN_ONLY for d in hn_only})


def objects_of(class_strategy, split=False):
    summands = st.lists(st.tuples(degrees, class_strategy.map(SemistablePiece)), min_size=1, max_size=6)
    if split:
        return summands.map(_object)
    return st.builds(_object, summands, st.sets(degrees))


objects = objects_of(classes)
split_objects = objects_of(classes, split=True)
split_bundle_objects = objects_of(bundle_classes, split=True)
