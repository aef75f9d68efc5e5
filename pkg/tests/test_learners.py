import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codemixkit import learners
from codemixkit.learners import (
    ClassifierKind,
    Hyperparams,
    cohen_kappa,
    confusion,
    load_model,
    metrics,
    predict,
    save_model,
    train,
)

TABLE3 = np.array([[161, 12, 27], [17, 145, 38], [13, 21, 166]])


def make_blobs(rng, n_per_class, d_block=3, classes=3):
    """Sparse count data: each class is concentrated on its own feature block."""
    data = []
    d = d_block * classes
    for c in range(classes):
        for _ in range(n_per_class):
            x = np.zeros(d)
            for j in range(d):
                if c * d_block <= j < (c + 1) * d_block:
                    x[j] = rng.randint(3, 9)
                elif rng.random() < 0.15:
                    x[j] = rng.randint(1, 2)
            data.append((x, c))
    return data


def nb_oracle_predict(kind, dataset, x):
    """Independent pure-python Naive Bayes posterior computation."""
    labels = sorted({y for _, y in dataset})
    best, best_score = None, -math.inf
    for c in labels:
        xs = [list(map(float, v)) for v, y in dataset if y == c]
        prior = math.log(len(xs) / len(dataset))
        score = prior
        d = len(x)
        for j in range(d):
            col = [row[j] for row in xs]
            if kind is ClassifierKind.GNB:
                mu = sum(col) / len(col)
                var = max(sum((v - mu) ** 2 for v in col) / len(col), 1e-9)
                score += -0.5 * (math.log(2 * math.pi * var) + (x[j] - mu) ** 2 / var)
            elif kind is ClassifierKind.BNB:
                ones = sum(1 for v in col if v > 0)
                theta = (ones + 1) / (len(col) + 2)
                score += math.log(theta) if x[j] > 0 else math.log(1 - theta)
            else:
                tot_j = sum(col) + 1
                tot = sum(sum(r) for r in xs) + d
                score += x[j] * math.log(tot_j / tot)
        if score > best_score:
            best, best_score = c, score
    return best


class TestTrainPredict:
    def test_separable_sgdc(self):
        data = [(np.array([1.0, 0.0]), "a"), (np.array([0.0, 1.0]), "b")]
        model = train(ClassifierKind.SGDC, data)
        assert all(predict(model, x)[0] == y for x, y in data)

    def test_mnb_forced_by_counts(self):
        data = [(np.array([2.0, 0.0]), "A"), (np.array([0.0, 2.0]), "B")]
        model = train(ClassifierKind.MNB, data)
        label, s = predict(model, np.array([1.0, 0.0]))
        assert label == "A"
        assert s["A"] > s["B"]

    @pytest.mark.parametrize("kind", list(ClassifierKind))
    def test_blobs_high_training_accuracy(self, kind):
        data = make_blobs(random.Random(5), 100)
        model = train(kind, data)
        hits = sum(1 for x, y in data if predict(model, x)[0] == y)
        assert hits / len(data) >= 0.9

    @pytest.mark.parametrize(
        "kind", [ClassifierKind.GNB, ClassifierKind.BNB, ClassifierKind.MNB]
    )
    def test_nb_agrees_with_posterior_oracle(self, kind):
        rng = random.Random(11)
        data = make_blobs(rng, 30)
        model = train(kind, data)
        held_out = make_blobs(random.Random(99), 5)
        for x, _ in held_out:
            assert predict(model, x)[0] == nb_oracle_predict(kind, data, x)

    def test_single_class_rejected(self):
        with pytest.raises(ValueError):
            train(ClassifierKind.GNB, [(np.array([1.0]), "a")] * 3)

    def test_dimension_mismatch(self):
        data = [(np.array([1.0, 0.0]), 0), (np.array([0.0, 1.0]), 1)]
        model = train(ClassifierKind.SGDC, data)
        with pytest.raises(ValueError):
            predict(model, np.array([1.0]))

    def test_zero_vector_tie_breaks_to_first_label(self):
        data = [
            (np.array([1.0, 0.0]), "neg"),
            (np.array([0.0, 1.0]), "neu"),
            (np.array([1.0, 1.0]), "pos"),
        ]
        model = train(ClassifierKind.SGDC, data, Hyperparams(epochs=0))
        # Untrained weights are all zero, so every score ties.
        assert predict(model, np.zeros(2))[0] == "neg"

    def test_training_deterministic(self):
        data = make_blobs(random.Random(3), 20)
        m1 = train(ClassifierKind.SGDC, data)
        m2 = train(ClassifierKind.SGDC, data)
        assert np.array_equal(m1.params["weights"], m2.params["weights"])

    def test_nb_duplication_invariance(self):
        data = make_blobs(random.Random(7), 20)
        doubled = data + data
        for kind in (ClassifierKind.GNB, ClassifierKind.BNB, ClassifierKind.MNB):
            m1 = train(kind, data)
            m2 = train(kind, doubled)
            for x, _ in data:
                assert predict(m1, x)[0] == predict(m2, x)[0]

    def test_hinge_loss_non_increasing_on_separable_data(self):
        data = [
            (np.array([2.0, 0.0]), 0),
            (np.array([2.5, 0.5]), 0),
            (np.array([0.0, 2.0]), 1),
            (np.array([0.5, 2.5]), 1),
        ]

        def total_hinge(model):
            loss = 0.0
            for x, y in data:
                for c, lab in enumerate(model.labels):
                    t = 1.0 if y == lab else -1.0
                    margin = model.params["weights"][c] @ x + model.params["biases"][c]
                    loss += max(0.0, 1.0 - t * margin)
            return loss

        losses = [
            total_hinge(train(ClassifierKind.SGDC, data, Hyperparams(epochs=e)))
            for e in (1, 3, 6, 10, 20)
        ]
        for earlier, later in zip(losses, losses[1:]):
            assert later <= earlier + 1e-6


class TestConfusion:
    def test_diagonal(self):
        cm = confusion(["a", "b", "a"], ["a", "b", "a"])
        assert np.array_equal(cm.counts, np.array([[2, 0], [0, 1]]))

    def test_all_wrong(self):
        cm = confusion(["p", "p"], ["n", "n"])
        assert cm.counts[cm.labels.index("p"), cm.labels.index("n")] == 2
        assert cm.counts.sum() == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            confusion(["a"], ["a", "b"])

    def test_reproduces_published_matrix(self):
        gold, pred = [], []
        for i, row in enumerate(TABLE3):
            for j, count in enumerate(row):
                gold.extend([i] * count)
                pred.extend([j] * count)
        cm = confusion(gold, pred, labels=[0, 1, 2])
        assert np.array_equal(cm.counts, TABLE3)


def metrics_oracle(counts):
    """Independent pure-python metric computation."""
    k = len(counts)
    total = sum(sum(r) for r in counts)
    acc = sum(counts[i][i] for i in range(k)) / total
    precs, recs, f1s, gs = [], [], [], []
    for i in range(k):
        col = sum(counts[r][i] for r in range(k))
        row = sum(counts[i])
        p = counts[i][i] / col if col else 0.0
        r = counts[i][i] / row if row else 0.0
        precs.append(p)
        recs.append(r)
        f1s.append(2 * p * r / (p + r) if p + r else 0.0)
        gs.append(math.sqrt(p * r))
    mean = lambda xs: sum(xs) / len(xs)
    return tuple(
        round(100 * v, 2) for v in (acc, mean(precs), mean(recs), mean(f1s), mean(gs))
    )


class TestMetrics:
    def test_published_confusion_matrix_values(self):
        cm = confusion([0], [0], labels=[0, 1, 2])
        cm.counts = TABLE3
        report = metrics(cm)
        # Frozen from the independent oracle over the published matrix.
        assert metrics_oracle(TABLE3.tolist()) == (78.67, 79.21, 78.67, 78.7, 78.82)
        assert report.accuracy == 78.67
        assert report.macro_precision == 79.21
        assert report.macro_recall == 78.67
        assert report.macro_f1 == 78.70
        assert report.macro_g == 78.82

    def test_perfect_matrix(self):
        cm = confusion([0] * 10 + [1] * 10 + [2] * 10, [0] * 10 + [1] * 10 + [2] * 10)
        report = metrics(cm)
        assert (
            report.accuracy
            == report.macro_precision
            == report.macro_recall
            == report.macro_f1
            == report.macro_g
            == 100.00
        )

    def test_never_predicted_class_convention(self):
        cm = confusion(["a", "b"], ["a", "a"])
        report = metrics(cm)
        assert report.macro_precision == round(100 * (0.5 + 0.0) / 2, 2)
        assert report.accuracy == 50.0

    def test_empty_rejected(self):
        cm = confusion(["a"], ["a"])
        cm.counts = np.zeros((1, 1), dtype=int)
        with pytest.raises(ValueError):
            metrics(cm)

    @given(
        st.lists(
            st.tuples(st.sampled_from("abc"), st.sampled_from("abc")),
            min_size=1,
            max_size=60,
        )
    )
    @settings(max_examples=50)
    def test_accuracy_equals_match_fraction(self, pairs):
        gold = [g for g, _ in pairs]
        pred = [p for _, p in pairs]
        report = metrics(confusion(gold, pred, labels=["a", "b", "c"]))
        direct = sum(1 for g, p in pairs if g == p) / len(pairs)
        assert report.accuracy == round(100 * direct, 2)


def kappa_oracle(a, b):
    labels = sorted(set(a) | set(b))
    n = len(a)
    table = {(x, y): 0 for x in labels for y in labels}
    for x, y in zip(a, b):
        table[(x, y)] += 1
    p_o = sum(table[(x, x)] for x in labels) / n
    p_e = sum(
        (sum(table[(x, y)] for y in labels) / n)
        * (sum(table[(y, x)] for y in labels) / n)
        for x in labels
    )
    if p_o == 1.0 or p_e == 1.0:
        return 1.0
    return (p_o - p_e) / (1 - p_e)


class TestKappa:
    def test_identical(self):
        assert cohen_kappa(["p", "n", "u"], ["p", "n", "u"]) == 1.0

    def test_independence_zero(self):
        assert cohen_kappa(["p", "p", "n", "n"], ["p", "n", "p", "n"]) == 0.0

    def test_hand_computed_case(self):
        a = ["p", "p", "p", "n", "n", "u"]
        b = ["p", "p", "n", "n", "n", "u"]
        # p_o = 5/6, p_e = 13/36, kappa = 17/23.
        assert cohen_kappa(a, b) == pytest.approx(17 / 23, abs=1e-12)

    def test_degenerate_single_label(self):
        assert cohen_kappa(["x", "x"], ["x", "x"]) == 1.0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            cohen_kappa(["a"], ["a", "b"])

    def test_symmetry_and_oracle_agreement(self):
        rng = random.Random(42)
        for _ in range(100):
            n = rng.randint(1, 80)
            a = [rng.choice("pnu") for _ in range(n)]
            b = [rng.choice("pnu") for _ in range(n)]
            k = cohen_kappa(a, b)
            assert k == pytest.approx(kappa_oracle(a, b), abs=1e-12)
            assert k == pytest.approx(cohen_kappa(b, a), abs=1e-12)

    def test_relabeling_invariance(self):
        rng = random.Random(1)
        a = [rng.choice("pnu") for _ in range(60)]
        b = [rng.choice("pnu") for _ in range(60)]
        mapping = {"p": "X", "n": "Y", "u": "Z"}
        assert cohen_kappa(a, b) == pytest.approx(
            cohen_kappa([mapping[x] for x in a], [mapping[x] for x in b]), abs=1e-12
        )


class TestSerialization:
    @pytest.mark.parametrize("kind", list(ClassifierKind))
    def test_round_trip_bit_exact(self, kind, tmp_path):
        data = make_blobs(random.Random(2), 15)
        model = train(kind, data)
        path = str(tmp_path / "m.sentmodel")
        save_model(model, path)
        loaded = load_model(path)
        assert loaded.kind == model.kind
        assert loaded.labels == model.labels
        for name, arr in model.params.items():
            assert np.array_equal(loaded.params[name], arr), name
        for x, _ in data:
            assert predict(loaded, x) == predict(model, x)
        save_model(loaded, str(tmp_path / "m2.sentmodel"))
        assert (tmp_path / "m.sentmodel").read_bytes() == (
            tmp_path / "m2.sentmodel"
        ).read_bytes()

    def test_rejects_wrong_header(self, tmp_path):
        path = tmp_path / "bad"
        path.write_text("WRONG v9\n")
        with pytest.raises(ValueError):
            load_model(str(path))
