import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from viviani import (
    DocumentSyntaxError,
    NormalizationWarning,
    NormTolerance,
    SchemaError,
    VivianiError,
    parse_document,
    planes_document,
    points_document,
    polygon_document,
    serialize_document,
)
from viviani.polytope import ConvexPolygon, platonic_solid_normals


def doc_equal(a, b) -> bool:
    if a.dimension != b.dimension or a.kind != b.kind or a.metadata != b.metadata:
        return False
    if a.kind == "planes":
        return all(
            p.normal.tolist() == q.normal.tolist() and p.offset == q.offset
            for p, q in zip(a.planes, b.planes)
        )
    if a.kind == "polygon":
        return a.polygon.vertices.tolist() == b.polygon.vertices.tolist()
    return a.points.tolist() == b.points.tolist()


class TestParse:
    def test_minimal_planes_doc(self):
        doc = parse_document('{"dimension":2,"planes":[{"normal":[1,0],"offset":1}]}')
        assert doc.kind == "planes"
        assert doc.planes[0].normal.tolist() == [1.0, 0.0]
        assert doc.planes[0].offset == 1.0

    def test_norm_tolerance_rejected(self):
        with pytest.raises(NormTolerance):
            parse_document('{"dimension":2,"planes":[{"normal":[2,0],"offset":1}]}')

    def test_near_unit_renormalized_with_warning(self):
        text = json.dumps(
            {"dimension": 2, "planes": [{"normal": [1.0 + 3e-8, 0.0], "offset": 1.0}]}
        )
        with pytest.warns(NormalizationWarning):
            doc = parse_document(text)
        assert abs(np.linalg.norm(doc.planes[0].normal) - 1.0) <= 1e-15

    def test_within_1e9_kept_verbatim(self):
        value = 1.0 + 2e-10
        text = json.dumps({"dimension": 2, "planes": [{"normal": [value, 0.0], "offset": 0.0}]})
        doc = parse_document(text)
        assert doc.planes[0].normal[0] == value

    def test_two_payloads_rejected(self):
        with pytest.raises(SchemaError):
            parse_document(
                '{"dimension":2,"planes":[{"normal":[1,0],"offset":1}],"points":[[0,0]]}'
            )

    def test_no_payload_rejected(self):
        with pytest.raises(SchemaError):
            parse_document('{"dimension":2}')

    def test_syntax_error_carries_position(self):
        with pytest.raises(DocumentSyntaxError) as err:
            parse_document('{"dimension": 2,\n  "points": [[0, 0],]\n}')
        assert "line 2" in str(err.value)

    def test_schema_error_names_path(self):
        with pytest.raises(SchemaError) as err:
            parse_document('{"dimension":2,"points":[[0,0],[1,"x"]]}')
        assert "points[1]" in str(err.value)

    def test_wrong_arity_rejected(self):
        with pytest.raises(SchemaError):
            parse_document('{"dimension":3,"points":[[0,0]]}')

    def test_non_finite_rejected(self):
        with pytest.raises(SchemaError):
            parse_document('{"dimension":2,"points":[[0,NaN]]}')

    def test_unknown_key_rejected(self):
        with pytest.raises(SchemaError):
            parse_document('{"dimension":2,"points":[[0,0]],"color":"red"}')

    def test_polygon_must_be_2d(self):
        with pytest.raises(SchemaError):
            parse_document('{"dimension":3,"polygon":{"vertices":[[0,0],[1,0],[0,1]]}}')

    def test_nonconvex_polygon_rejected(self):
        with pytest.raises(SchemaError):
            parse_document(
                '{"dimension":2,"polygon":{"vertices":[[0,0],[4,0],[1,1],[0,4]]}}'
            )

    def test_metadata_must_be_strings(self):
        with pytest.raises(SchemaError):
            parse_document('{"dimension":2,"points":[[0,0]],"metadata":{"a":1}}')

    def test_bytes_accepted(self):
        doc = parse_document(b'{"dimension":2,"points":[[0,0]]}')
        assert doc.kind == "points"

    def test_invalid_utf8(self):
        with pytest.raises(DocumentSyntaxError):
            parse_document(b'{"dimension": 2\xff}')


class TestRoundTrip:
    @pytest.mark.parametrize("build", [
        lambda: planes_document(platonic_solid_normals("dodecahedron"),
                                metadata={"b": "2", "a": "1"}),
        lambda: points_document(np.array([[0.25, -1.5, 3.125], [1e-17, 2.0, -0.0]])),
        lambda: polygon_document(ConvexPolygon(np.array([[0.0, 0], [4, 0], [3, 2], [1, 2]]))),
    ])
    def test_parse_serialize_parse_identity(self, build):
        doc = build()
        text = serialize_document(doc)
        again = parse_document(text)
        assert doc_equal(doc, again)
        assert serialize_document(again) == text

    @settings(max_examples=100, deadline=None)
    @given(
        rows=st.lists(
            st.lists(
                st.floats(allow_nan=False, allow_infinity=False, width=64),
                min_size=3,
                max_size=3,
            ),
            min_size=1,
            max_size=6,
        )
    )
    def test_point_payload_round_trip_any_floats(self, rows):
        doc = points_document(np.array(rows, dtype=float))
        again = parse_document(serialize_document(doc))
        assert again.points.tolist() == doc.points.tolist()
        assert serialize_document(again) == serialize_document(doc)

    def test_document_payload_accessors(self):
        doc = points_document([[0.0, 0.0], [1.0, 1.0]])
        assert doc.point_array().shape == (2, 2)
        with pytest.raises(VivianiError):
            doc.to_hyperplane_set()
        planes = planes_document(platonic_solid_normals("cube"))
        assert len(planes.to_hyperplane_set()) == 6
        with pytest.raises(VivianiError):
            planes.point_array()
