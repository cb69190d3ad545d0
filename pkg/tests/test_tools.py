import pytest

from src.tools import StringDumpYaml, load_document, save_document


def test_dump_returns_text():
    text = StringDumpYaml().dump({"n": 2, "wires": [0, 1], "layers": [{"j": 2, "z": []}]})
    assert isinstance(text, str)
    assert "wires: [0, 1]" in text
    assert "layers:\n" in text


def test_long_lines_are_not_folded():
    text = StringDumpYaml().dump({"lhs": "; ".join(["H 0"] * 400)})
    assert len(text.splitlines()) == 1


def test_documents_round_trip(tmp_path):
    data = {"count": 2, "rules": [{"family": "H.A", "bindings": {"a": 1, "b": 0}, "t": 5}]}
    path = str(tmp_path / "deep" / "doc.yaml")
    save_document(data, path)
    assert load_document(path) == data


def test_invalid_document(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("rules: [1, 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_document(str(path))
