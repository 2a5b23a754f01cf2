import random

import pytest
from hypothesis import given, settings

from knotatoms.bracket import kauffman_bracket
from knotatoms.diagram import (
    BraidWord,
    Diagram,
    DiagramError,
    LongDiagram,
    ParseError,
    braid_closure,
    cable,
    canonical_code,
    circle,
    component_count,
    connected_sum,
    crossing_signs,
    is_classical,
    is_knot,
    mirror,
    parse_braid,
    parse_gauss,
    parse_long_gauss,
    parse_pd,
    random_diagram,
    serialize_pd,
    shadow_euler_characteristic,
    writhe,
)

from conftest import HOPF_PD, TREFOIL_PD
from oracles import permutation_cycles, shadow_chi, strand_components
from strategies import classical_diagrams, diagrams, virtual_diagrams


class TestParsePD:
    def test_trefoil(self, trefoil):
        assert trefoil.n == 3
        assert is_knot(trefoil)
        assert is_classical(trefoil)
        assert serialize_pd(trefoil) == TREFOIL_PD

    def test_kinked_unknot(self, kink):
        assert kink.n == 1
        assert is_knot(kink)
        assert kink.pairing[kink.crossings[0][0]] == kink.crossings[0][1]

    def test_label_appearing_once(self):
        with pytest.raises(ParseError, match="appears 1 times"):
            parse_pd("X(1,2,3,4)")

    def test_wrong_label_count(self):
        with pytest.raises(ParseError, match="3 labels"):
            parse_pd("X(1,2,1)")

    def test_disconnected_shadow(self):
        with pytest.raises(ParseError, match="split"):
            parse_pd("X(1,2,2,1) X(3,4,4,3)")

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_pd("X(1,2,2,1)\nX(3,4,5,5)")
        assert (info.value.line, info.value.column) == (2, 1)

    def test_garbage(self):
        with pytest.raises(ParseError, match="unexpected input"):
            parse_pd("X(1,2,2,1) Y(3)")

    def test_empty(self):
        with pytest.raises(ParseError, match="empty"):
            parse_pd("   ")

    def test_mathematica_wrapper(self):
        d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
        assert serialize_pd(d) == TREFOIL_PD


class TestRoundTrip:
    def test_corpus(self, corpus_diagrams):
        for entry, d in corpus_diagrams:
            if not d.n:
                continue
            again = parse_pd(serialize_pd(d))
            if entry.format == "pd":
                assert again == d, entry.name
            else:
                assert canonical_code(again) == canonical_code(d), entry.name

    @given(diagrams)
    def test_parse_serialize_is_identity_on_parsed_diagrams(self, d):
        normal = parse_pd(serialize_pd(d))
        assert canonical_code(normal) == canonical_code(d)
        if is_knot(d):
            assert writhe(normal) == writhe(d)
        assert parse_pd(serialize_pd(normal)) == normal
        assert serialize_pd(parse_pd(serialize_pd(normal))) == serialize_pd(normal)

    def test_link_components_keep_their_orientation(self, hopf):
        assert parse_pd(serialize_pd(hopf)) == hopf
        assert writhe(parse_pd(serialize_pd(mirror(hopf)))) == writhe(mirror(hopf))

    def test_serialization_is_deterministic(self, trefoil):
        assert {serialize_pd(parse_pd(TREFOIL_PD)) for _ in range(5)} == {TREFOIL_PD}


class TestGauss:
    def test_virtual_trefoil(self, virtual_trefoil):
        d = virtual_trefoil
        assert d.n == 2
        assert not is_classical(d)
        assert shadow_chi(d.crossings, d.pairing) == 0
        assert shadow_euler_characteristic(d) == 0

    def test_classical_trefoil(self):
        d = parse_gauss("O1+U2+O3+U1+O2+U3+")
        assert shadow_chi(d.crossings, d.pairing) == 2
        assert is_classical(d)
        assert writhe(d) == 3

    def test_sign_mismatch(self):
        with pytest.raises(ParseError, match="sign mismatch for crossing 1"):
            parse_gauss("O1+U1−")

    def test_unbalanced(self):
        with pytest.raises(ParseError, match="no U passage"):
            parse_gauss("O1+O2+U2+")
        with pytest.raises(ParseError, match="two O passages"):
            parse_gauss("O1+O1+")

    def test_signs_are_read_back(self):
        d = parse_gauss("O1-U2+O3-U1-O2+U3-")
        assert crossing_signs(d) == [-1, 1, -1]

    def test_long_gauss(self):
        ld = parse_long_gauss("O1-U2-O3-U1-O2-U3-")
        assert ld.n == 3
        assert ld.closure.pairing[ld.end] == ld.start


class TestBraidClosure:
    @pytest.mark.parametrize(
        "text, n, comps",
        [("2: s1^3", 3, 1), ("3: s1^3 s2^3", 6, 1), ("3: s1^2 s2^2", 4, 3), ("3: s1 s2^-1 s1 s2^-1", 4, 1)],
    )
    def test_counts(self, text, n, comps):
        w = parse_braid(text)
        d = braid_closure(w)
        assert d.n == n == sum(abs(j) for _, j in w.letters)
        assert component_count(d) == comps == permutation_cycles(w.strand_count, w.letters)
        assert is_classical(d)

    def test_positive_braid_trefoil_writhe(self):
        assert writhe(braid_closure(parse_braid("s1^3"))) == 3

    def test_braid_trefoil_is_mirror_of_pd_trefoil(self, trefoil):
        assert canonical_code(braid_closure(parse_braid("s1^3"))) == canonical_code(mirror(trefoil))

    def test_one_strand_is_a_circle(self):
        assert braid_closure(BraidWord(1, ())) == circle()

    def test_split_braid(self):
        with pytest.raises(DiagramError, match="split"):
            braid_closure(parse_braid("4: s1^2 s3^2"))
        with pytest.raises(DiagramError, match="split"):
            braid_closure(parse_braid("3: s1^3"))

    def test_word_validation(self):
        with pytest.raises(ValueError):
            BraidWord(2, ((2, 1),))
        with pytest.raises(ValueError):
            BraidWord(3, ((1, 0),))
        with pytest.raises(ParseError):
            parse_braid("")

    def test_parse_forms(self):
        assert parse_braid("s1^3 s2^-1") == BraidWord(3, ((1, 3), (2, -1)))
        assert parse_braid("4: sigma_1 s2^{2}") == BraidWord(4, ((1, 1), (2, 2)))

    @settings(max_examples=60)
    @given(classical_diagrams())
    def test_random_closures_are_classical(self, d):
        assert is_classical(d)
        assert component_count(d) == strand_components(d.crossings, d.pairing)


class TestMirror:
    def test_involution_dart_for_dart(self, trefoil, kink, virtual_trefoil):
        for d in (trefoil, kink, virtual_trefoil):
            assert mirror(mirror(d)) == d
            assert mirror(mirror(d)).crossings == d.crossings

    def test_kink_writhe_flips(self, kink):
        assert writhe(kink) == -1
        assert writhe(mirror(kink)) == 1

    def test_trefoil_bracket_inverts(self, trefoil):
        assert kauffman_bracket(mirror(trefoil)) == kauffman_bracket(trefoil).invert_variable()

    @given(diagrams)
    def test_invariants(self, d):
        m = mirror(d)
        assert mirror(m) == d
        assert m.n == d.n
        assert m.pairing == d.pairing
        assert component_count(m) == component_count(d)
        assert is_classical(m) == is_classical(d)
        assert writhe(m) == -writhe(d)


class TestConnectedSum:
    def test_trefoil_with_mirror(self, trefoil):
        s = connected_sum(trefoil, 0, mirror(trefoil), 0)
        assert s.n == 6
        assert is_knot(s)
        assert writhe(s) == 0
        assert is_classical(s)
        assert s.labels["provenance"] == "connected_sum(arc1=0, arc2=0)"

    def test_opposite_kinks(self, kink):
        s = connected_sum(mirror(kink), 0, kink, 0)
        assert s.n == 2
        assert writhe(s) == 0

    def test_invalid_arc(self, trefoil):
        with pytest.raises(DiagramError):
            connected_sum(trefoil, 99, trefoil, 0)

    def test_circle_is_neutral(self, trefoil):
        s = connected_sum(circle(), None, trefoil, 3)
        assert s == trefoil

    def test_every_arc_choice_of_planar_summands_is_planar(self, trefoil, kink):
        for a in range(trefoil.ndarts):
            for b in range(kink.ndarts):
                s = connected_sum(trefoil, a, kink, b)
                assert is_classical(s) and is_knot(s)

    @settings(max_examples=40)
    @given(virtual_diagrams(max_n=5), virtual_diagrams(max_n=5))
    def test_counts(self, d1, d2):
        s = connected_sum(d1, 0, d2, 0)
        assert s.n == d1.n + d2.n
        assert component_count(s) == component_count(d1) + component_count(d2) - 1

    def test_hopf_sum_components(self, hopf):
        s = connected_sum(hopf, 0, hopf, 2)
        assert component_count(s) == 3


class TestCable:
    def test_identity(self, trefoil, virtual_trefoil):
        for d in (trefoil, virtual_trefoil, mirror(trefoil)):
            assert canonical_code(cable(d, 1)) == canonical_code(d)

    def test_trefoil_two_cable(self, trefoil):
        c = cable(trefoil, 2)
        assert c.n == 12
        assert component_count(c) == 2 == strand_components(c.crossings, c.pairing)
        assert is_classical(c)

    def test_kink_two_cable(self, kink):
        assert cable(kink, 2).n == 4

    def test_zero(self, trefoil):
        with pytest.raises(ValueError):
            cable(trefoil, 0)

    @settings(max_examples=40)
    @given(diagrams)
    def test_counts(self, d):
        for k in (2, 3):
            c = cable(d, k)
            assert c.n == k * k * d.n
            assert component_count(c) == k * component_count(d)
            assert is_classical(c) == is_classical(d)

    def test_blackboard_framing(self, trefoil):
        # each component of the 2-cable has the writhe of the original
        c = cable(braid_closure(parse_braid("s1^3")), 2)
        assert writhe(c) == 4 * 3


class TestQueries:
    def test_components(self, trefoil, hopf):
        assert component_count(trefoil) == 1
        assert component_count(hopf) == 2 == strand_components(hopf.crossings, hopf.pairing)
        assert component_count(braid_closure(parse_braid("3: s1^2 s2^2"))) == 3

    def test_circle(self):
        c = circle()
        assert is_classical(c)
        assert is_knot(c)
        assert writhe(c) == 0

    def test_writhe_is_orientation_free_for_knots(self, rng):
        for _ in range(50):
            d = random_diagram(rng.randint(1, 7), rng)
            if not is_knot(d):
                continue
            # renumbering darts in reverse order changes which dart is lowest
            top = d.ndarts - 1
            rev = Diagram(
                tuple(tuple(top - x for x in c) for c in d.crossings),
                tuple(top - d.pairing[top - x] for x in range(d.ndarts)),
            )
            assert writhe(rev) == writhe(d)

    @given(diagrams)
    def test_classical_matches_oracle(self, d):
        assert is_classical(d) == (shadow_chi(d.crossings, d.pairing) == 2)
        assert component_count(d) == strand_components(d.crossings, d.pairing)

    def test_hopf(self):
        d = parse_pd(HOPF_PD)
        assert is_classical(d)
        assert not is_knot(d)


class TestDiagramValidation:
    def test_fixed_point(self):
        with pytest.raises(DiagramError):
            Diagram(((0, 1, 2, 3),), (0, 2, 1, 3))

    def test_not_involution(self):
        with pytest.raises(DiagramError):
            Diagram(((0, 1, 2, 3),), (1, 2, 3, 0))

    def test_repeated_dart(self):
        with pytest.raises(DiagramError):
            Diagram(((0, 1, 1, 3),), (1, 0, 3, 2))

    def test_labels_do_not_affect_equality(self, trefoil):
        assert trefoil.with_labels(name="3_1") == trefoil

    def test_relabeled(self, trefoil):
        m = mirror(trefoil)
        r = m.relabeled()
        assert canonical_code(r) == canonical_code(m)
        assert all(c == tuple(range(4 * i, 4 * i + 4)) for i, c in enumerate(r.crossings))


class TestLongDiagram:
    def test_cut(self, trefoil):
        ld = LongDiagram.cut(trefoil)
        assert ld.closure == trefoil
        assert ld.start == 0

    def test_crossingless(self):
        ld = LongDiagram(circle())
        assert ld.n == 0

    def test_bad_endpoints(self, trefoil):
        with pytest.raises(DiagramError):
            LongDiagram(trefoil, 0, 1)

    def test_links_rejected(self, hopf):
        with pytest.raises(DiagramError):
            LongDiagram.cut(hopf)


def test_canonical_code_detects_relabelling(rng):
    for _ in range(30):
        d = random_diagram(rng.randint(1, 6), rng)
        perm = list(range(d.n))
        rng.shuffle(perm)
        crossings = [None] * d.n
        for i, c in enumerate(d.crossings):
            crossings[perm[i]] = c
        shuffled = Diagram(tuple(crossings), d.pairing)
        assert canonical_code(shuffled) == canonical_code(d)


def test_canonical_code_separates_mirrors(trefoil):
    assert canonical_code(trefoil) != canonical_code(mirror(trefoil))


def test_random_diagram_is_connected():
    r = random.Random(3)
    for n in range(1, 9):
        assert random_diagram(n, r).n == n
