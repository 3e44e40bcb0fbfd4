import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir,
                        "src", "curvelat", "data")

CORPUS = ["line", "cusp", "t2t5", "a3", "a5", "a7", "d5", "triple"]


def corpus_path(name):
    return os.path.join(DATA_DIR, name + ".json")


def corpus_curve(name):
    from curvelat.curve import BranchParametrization, Curve

    with open(corpus_path(name)) as fh:
        doc = json.load(fh)
    branches = [
        BranchParametrization.from_strings(b["x"], b["y"], doc["truncation"])
        for b in doc["branches"]
    ]
    return Curve(branches)
