import unittest

from parameterized import parameterized

from src.exceptions import GeometryError, ReferencePointError
from src.models import (
    FrontKind, SolutionSet, get_front_spec, list_fronts, validate_front, E1, E2, E3, I1, I2, I3
)

class FrontKindTest(unittest.TestCase):

    @parameterized.expand([
        ("serialized", "type_iii", FrontKind.TYPE_III),
        ("camel", "TypeIII", FrontKind.TYPE_III),
        ("numeral", "III", FrontKind.TYPE_III),
        ("dashed", "type-iv", FrontKind.TYPE_IV),
        ("enum", FrontKind.TYPE_VIII, FrontKind.TYPE_VIII),
    ])
    def test_parse(self, _, name, expected):
        self.assertIs(FrontKind.parse(name), expected)

    def test_parse_unknown(self):
        with self.assertRaises(GeometryError):
            FrontKind.parse("type_ix")

    def test_numeral_and_plane_flag(self):
        self.assertEqual(FrontKind.TYPE_VII.numeral, "VII")
        self.assertTrue(FrontKind.TYPE_VIII.is_plane)
        self.assertFalse(FrontKind.TYPE_V.is_plane)

class FrontRegistryTest(unittest.TestCase):

    def test_list_fronts(self):
        self.assertEqual(len(list_fronts()), 8)
        self.assertEqual(list_fronts(line_based=False), ("type_vii", "type_viii"))
        self.assertEqual(len(list_fronts(line_based=True)), 6)

    def test_validate_front(self):
        self.assertTrue(validate_front("VI"))
        self.assertFalse(validate_front("hexagon"))

    def test_unknown_front_logs_warning(self):
        with self.assertLogs("src.models", level="WARNING"):
            with self.assertRaises(GeometryError):
                get_front_spec("hexagon")

    @parameterized.expand([
        ("type_i", 1), ("type_ii", 1), ("type_iii", 2), ("type_iv", 2), ("type_v", 3), ("type_vi", 3),
        ("type_vii", 0), ("type_viii", 0),
    ])
    def test_segment_counts(self, name, segments):
        self.assertEqual(len(get_front_spec(name).segments), segments)

    def test_extreme_points(self):
        self.assertEqual(get_front_spec("type_iv").extreme_points, (I1, I3, I2))
        self.assertEqual(set(get_front_spec("type_v").extreme_points), {E1, E2, E3})

    @parameterized.expand([
        ("corner_on_first", "type_v", E3, 0),
        ("shared_corner", "type_v", E1, 0),
        ("far_corner", "type_v", E2, 1),
        ("inverted_far_corner", "type_vi", I2, 1),
    ])
    def test_segment_owner(self, _, name, corner, owner):
        self.assertEqual(get_front_spec(name).segment_owner(corner), owner)

    def test_segment_owner_rejects_non_corner(self):
        with self.assertRaises(GeometryError):
            get_front_spec("type_iii").segment_owner((0.5, 0.0, 0.5))

class ContainsTest(unittest.TestCase):

    @parameterized.expand([
        ("triangle_center", "type_vii", (1 / 3, 1 / 3, 1 / 3), True),
        ("off_triangle", "type_vii", (0.5, 0.5, 0.5), False),
        ("inverted_center", "type_viii", (2 / 3, 2 / 3, 2 / 3), True),
        ("inverted_above_one", "type_viii", (1.5, 0.5, 0.0), False),
        ("edge_f2_zero", "type_iii", (0.5, 0.0, 0.5), True),
        ("edge_f3_zero", "type_iii", (0.5, 0.5, 0.0), True),
        ("missing_edge", "type_iii", (0.0, 0.5, 0.5), False),
        ("third_edge", "type_v", (0.0, 0.5, 0.5), True),
        ("diagonal", "type_ii", (0.6, 0.6, 0.4), True),
        ("not_finite", "type_vii", (float("nan"), 0.5, 0.5), False),
    ])
    def test_contains(self, _, name, point, expected):
        self.assertEqual(get_front_spec(name).contains(point), expected)

    def test_segment_nearest(self):
        t, dist = get_front_spec("type_i").segments[0].nearest((0.5, 1.0, 0.5))
        self.assertAlmostEqual(t, 0.5)
        self.assertAlmostEqual(dist, 1.0)

class SolutionSetTest(unittest.TestCase):

    def test_duplicates_collapse(self):
        s = SolutionSet(((1.0, 1.0, 1.0), (1.0, 1.0, 1.0), (2.0, 0.5, 0.5)), (0.0, 0.0, 0.0))
        self.assertEqual(len(s), 2)

    def test_reference_must_be_dominated(self):
        with self.assertRaises(ReferencePointError):
            SolutionSet(((0.0, 1.0, 1.0),), (0.0, 0.0, 0.0))

    def test_with_and_without(self):
        s = SolutionSet(((1.0, 2.0, 3.0),), (0.0, 0.0, 0.0))
        self.assertEqual(s.hypervolume(), 6.0)
        grown = s.with_point((3.0, 2.0, 1.0))
        self.assertEqual(len(grown), 2)
        self.assertEqual(grown.without(0).points, ((3.0, 2.0, 1.0),))
        with self.assertRaises(IndexError):
            grown.without(2)

    def test_contributions_align_with_points(self):
        s = SolutionSet(((1.0, 2.0, 3.0), (3.0, 2.0, 1.0)), (0.0, 0.0, 0.0))
        # overlap is the box [0,1]x[0,2]x[0,1]
        self.assertEqual(s.contributions(), (4.0, 4.0))

if __name__ == "__main__":
    unittest.main()
