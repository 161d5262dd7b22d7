import xml.etree.ElementTree as ET

from hildenlift.braidcalc import BraidWord, NamedElement, named_word
from hildenlift.render import render_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def crossings(svg):
    root = ET.fromstring(svg.split("\n", 1)[1])
    return root.findall(".//svg:g[@class='crossing']", NS), root


def test_single_crossing():
    found, _ = crossings(render_svg(BraidWord(4, (1,))))
    assert len(found) == 1
    assert found[0].get("data-letter") == "s1"


def test_empty_word_straight_strands():
    found, root = crossings(render_svg(BraidWord(4)))
    assert found == []
    lines = root.findall(".//svg:line", NS)
    assert len(lines) == 4
    assert all(l.get("x1") == l.get("x2") for l in lines)


def test_s1_four_crossings():
    found, _ = crossings(render_svg(named_word(NamedElement("s", 1, 1))))
    assert [g.get("data-letter") for g in found] == ["s2", "s3", "s1", "s2"]


def test_sign_swaps_over_strand():
    pos, _ = crossings(render_svg(BraidWord(3, (1,))))
    neg, _ = crossings(render_svg(BraidWord(3, (-1,))))
    over_pos = pos[0].find("svg:line[@class='over']", NS)
    over_neg = neg[0].find("svg:line[@class='over']", NS)
    assert float(over_pos.get("x1")) < float(over_pos.get("x2"))
    assert float(over_neg.get("x1")) > float(over_neg.get("x2"))


def test_deterministic():
    b = BraidWord(6, (1, -3, 5, 2, -2))
    assert render_svg(b) == render_svg(BraidWord(6, (1, -3, 5, 2, -2)))
