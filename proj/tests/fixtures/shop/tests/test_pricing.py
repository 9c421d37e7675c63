import pytest

from shop.pricing import discount, parse_quantity


@pytest.mark.parametrize("code, expected", [(None, 100.0), ("SAVE10", 90.0)])
def test_discount(code, expected):
    assert discount(100.0, code=code) == pytest.approx(expected)


def test_parse_quantity():
    assert parse_quantity("3") == 3
    with pytest.raises(ValueError):
        parse_quantity("-1")
