"""From-scratch supervised classifiers and the evaluation suite.

Five classifier kinds are supported: Gaussian, Bernoulli and Multinomial
Naive Bayes (closed-form training with smoothing) and two stochastically
trained linear models (hinge loss and logistic loss, one-vs-rest for more
than two classes). Training is deterministic given the shuffle seed.

Evaluation covers confusion matrices, accuracy, macro precision / recall /
F1 / G-score, and Cohen's kappa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

GNB_VARIANCE_FLOOR = 1e-9


class ClassifierKind(Enum):
    GNB = "gnb"
    BNB = "bnb"
    MNB = "mnb"
    SGDC = "sgdc"
    LRC = "lrc"


@dataclass(frozen=True)
class Hyperparams:
    learning_rate: float = 0.1
    l2: float = 1e-4
    epochs: int = 20
    seed: int = 13


@dataclass
class ClassifierModel:
    kind: ClassifierKind
    labels: List
    dimension: int
    # NB kinds: log_priors (k,), plus per-kind statistics.
    # Linear kinds: weights (k, d) and biases (k,).
    params: Dict[str, np.ndarray] = field(default_factory=dict)
    meta: Dict[str, str] = field(default_factory=dict)


def _as_matrix(dataset) -> Tuple[np.ndarray, List]:
    xs = np.asarray([np.asarray(x, dtype=float) for x, _ in dataset])
    ys = [y for _, y in dataset]
    if xs.ndim != 2:
        raise ValueError("inconsistent feature dimensions")
    if not np.all(np.isfinite(xs)):
        raise ValueError("non-finite feature values")
    return xs, ys


def train(kind: ClassifierKind, dataset, hyperparams: Hyperparams = Hyperparams()) -> ClassifierModel:
    """Train a classifier of the given kind on (vector, label) pairs."""
    if not dataset:
        raise ValueError("empty dataset")
    xs, ys = _as_matrix(dataset)
    labels = sorted(set(ys))
    if len(labels) < 2:
        raise ValueError("training needs at least two classes")
    label_index = {lab: i for i, lab in enumerate(labels)}
    y_idx = np.array([label_index[y] for y in ys])
    k, d = len(labels), xs.shape[1]

    model = ClassifierModel(kind=kind, labels=labels, dimension=d)
    model.meta = {
        "learning_rate": repr(hyperparams.learning_rate),
        "l2": repr(hyperparams.l2),
        "epochs": str(hyperparams.epochs),
        "seed": str(hyperparams.seed),
    }

    counts = np.bincount(y_idx, minlength=k).astype(float)
    log_priors = np.log(counts / counts.sum())

    if kind is ClassifierKind.GNB:
        means = np.zeros((k, d))
        variances = np.zeros((k, d))
        for c in range(k):
            xc = xs[y_idx == c]
            means[c] = xc.mean(axis=0)
            variances[c] = np.maximum(xc.var(axis=0), GNB_VARIANCE_FLOOR)
        model.params = {"log_priors": log_priors, "means": means, "variances": variances}
    elif kind is ClassifierKind.BNB:
        xb = (xs > 0).astype(float)
        theta = np.zeros((k, d))
        for c in range(k):
            xc = xb[y_idx == c]
            theta[c] = (xc.sum(axis=0) + 1.0) / (len(xc) + 2.0)
        model.params = {"log_priors": log_priors, "theta": theta}
    elif kind is ClassifierKind.MNB:
        if np.any(xs < 0):
            raise ValueError("multinomial NB requires non-negative features")
        theta = np.zeros((k, d))
        for c in range(k):
            xc = xs[y_idx == c]
            totals = xc.sum(axis=0) + 1.0
            theta[c] = totals / totals.sum()
        model.params = {"log_priors": log_priors, "log_theta": np.log(theta)}
    elif kind in (ClassifierKind.SGDC, ClassifierKind.LRC):
        weights, biases = _train_linear(kind, xs, y_idx, k, d, hyperparams)
        model.params = {"weights": weights, "biases": biases}
    else:  # pragma: no cover
        raise ValueError(f"unknown classifier kind: {kind}")
    return model


def _train_linear(kind, xs, y_idx, k, d, hp: Hyperparams):
    rng = np.random.default_rng(hp.seed)
    weights = np.zeros((k, d))
    biases = np.zeros(k)
    n = len(xs)
    order = np.arange(n)
    for _ in range(hp.epochs):
        rng.shuffle(order)
        for i in order:
            x = xs[i]
            for c in range(k):
                y = 1.0 if y_idx[i] == c else -1.0
                score = weights[c] @ x + biases[c]
                if kind is ClassifierKind.SGDC:
                    weights[c] *= 1.0 - hp.learning_rate * hp.l2
                    if y * score < 1.0:
                        weights[c] += hp.learning_rate * y * x
                        biases[c] += hp.learning_rate * y
                else:  # logistic loss on targets {0, 1}
                    target = (y + 1.0) / 2.0
                    p = 1.0 / (1.0 + math.exp(-max(-500.0, min(500.0, score))))
                    grad = p - target
                    weights[c] -= hp.learning_rate * (grad * x + hp.l2 * weights[c])
                    biases[c] -= hp.learning_rate * grad
    return weights, biases


def scores(model: ClassifierModel, x) -> np.ndarray:
    """Per-class decision scores in ``model.labels`` order."""
    x = np.asarray(x, dtype=float)
    if x.shape != (model.dimension,):
        raise ValueError(
            f"feature dimension mismatch: expected {model.dimension}, got {x.shape}"
        )
    p = model.params
    if model.kind is ClassifierKind.GNB:
        log_lik = -0.5 * (
            np.log(2.0 * np.pi * p["variances"])
            + (x - p["means"]) ** 2 / p["variances"]
        ).sum(axis=1)
        return p["log_priors"] + log_lik
    if model.kind is ClassifierKind.BNB:
        xb = (x > 0).astype(float)
        theta = p["theta"]
        log_lik = (xb * np.log(theta) + (1.0 - xb) * np.log(1.0 - theta)).sum(axis=1)
        return p["log_priors"] + log_lik
    if model.kind is ClassifierKind.MNB:
        return p["log_priors"] + p["log_theta"] @ x
    return p["weights"] @ x + p["biases"]


def predict(model: ClassifierModel, x):
    """Return (label, per-class score map). Ties break to the first label
    in sorted label order."""
    s = scores(model, x)
    best = int(np.argmax(s))
    return model.labels[best], dict(zip(model.labels, s.tolist()))


@dataclass
class ConfusionMatrix:
    labels: List
    counts: np.ndarray  # rows = true class, columns = predicted class

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def confusion(gold: Sequence, pred: Sequence, labels: Sequence = None) -> ConfusionMatrix:
    if len(gold) != len(pred):
        raise ValueError("gold and predicted label sequences differ in length")
    if not gold:
        raise ValueError("empty label sequences")
    if labels is None:
        labels = sorted(set(gold) | set(pred))
    labels = list(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    counts = np.zeros((len(labels), len(labels)), dtype=int)
    for g, p in zip(gold, pred):
        counts[index[g], index[p]] += 1
    return ConfusionMatrix(labels=labels, counts=counts)


@dataclass(frozen=True)
class MetricsReport:
    """Percentages rounded to two decimals; macro values are unweighted
    means over classes."""

    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    macro_g: float


def metrics(cm: ConfusionMatrix) -> MetricsReport:
    counts = cm.counts.astype(float)
    total = counts.sum()
    if total == 0:
        raise ValueError("empty confusion matrix")
    diag = np.diag(counts)
    col = counts.sum(axis=0)
    row = counts.sum(axis=1)
    # Empty predicted column yields precision 0 rather than NaN.
    precision = np.divide(diag, col, out=np.zeros_like(diag), where=col > 0)
    recall = np.divide(diag, row, out=np.zeros_like(diag), where=row > 0)
    pr = precision + recall
    f1 = np.divide(2 * precision * recall, pr, out=np.zeros_like(pr), where=pr > 0)
    g = np.sqrt(precision * recall)
    return MetricsReport(
        accuracy=round(100.0 * diag.sum() / total, 2),
        macro_precision=round(100.0 * precision.mean(), 2),
        macro_recall=round(100.0 * recall.mean(), 2),
        macro_f1=round(100.0 * f1.mean(), 2),
        macro_g=round(100.0 * g.mean(), 2),
    )


def cohen_kappa(a: Sequence, b: Sequence) -> float:
    """Chance-corrected agreement between two label sequences.

    Returns 1.0 whenever observed agreement is perfect, including the
    degenerate case where expected agreement is also 1.
    """
    if len(a) != len(b):
        raise ValueError("label sequences differ in length")
    if not a:
        raise ValueError("empty label sequences")
    n = len(a)
    p_o = sum(1 for x, y in zip(a, b) if x == y) / n
    if p_o == 1.0:
        return 1.0
    labels = set(a) | set(b)
    p_e = 0.0
    for lab in labels:
        p_e += (sum(1 for x in a if x == lab) / n) * (sum(1 for y in b if y == lab) / n)
    if p_e == 1.0:
        return 1.0
    return (p_o - p_e) / (1.0 - p_e)


MODEL_HEADER = "SENTMODEL v1"


def save_model(model: ClassifierModel, path: str) -> None:
    """Text serialization, round-trip exact (floats written with repr)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(MODEL_HEADER + "\n")
        fh.write(f"kind\t{model.kind.value}\n")
        fh.write("labels\t" + "\t".join(str(l) for l in model.labels) + "\n")
        fh.write(f"dimension\t{model.dimension}\n")
        for key, value in sorted(model.meta.items()):
            fh.write(f"meta\t{key}\t{value}\n")
        for name, arr in sorted(model.params.items()):
            flat = np.asarray(arr)
            fh.write(
                f"param\t{name}\t{'x'.join(str(s) for s in flat.shape)}\t"
                + "\t".join(repr(float(v)) for v in flat.ravel())
                + "\n"
            )


def load_model(path: str) -> ClassifierModel:
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    if not lines or lines[0] != MODEL_HEADER:
        raise ValueError(f"not a {MODEL_HEADER} file: {path}")
    kind = None
    labels: List = []
    dimension = 0
    meta: Dict[str, str] = {}
    params: Dict[str, np.ndarray] = {}
    for line in lines[1:]:
        parts = line.split("\t")
        if parts[0] == "kind":
            kind = ClassifierKind(parts[1])
        elif parts[0] == "labels":
            labels = [_parse_label(p) for p in parts[1:]]
        elif parts[0] == "dimension":
            dimension = int(parts[1])
        elif parts[0] == "meta":
            meta[parts[1]] = parts[2]
        elif parts[0] == "param":
            shape = tuple(int(s) for s in parts[2].split("x"))
            values = np.array([float(v) for v in parts[3:]])
            params[parts[1]] = values.reshape(shape)
        else:
            raise ValueError(f"unknown model row: {line!r}")
    if kind is None:
        raise ValueError("model file missing kind row")
    return ClassifierModel(
        kind=kind, labels=labels, dimension=dimension, params=params, meta=meta
    )


def _parse_label(text: str):
    try:
        return int(text)
    except ValueError:
        return text
