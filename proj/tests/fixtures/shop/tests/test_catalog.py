from shop.catalog import Item, frozen_view, sample_item, snapshot


def test_item_subtotal():
    assert Item("pen", 2.0, qty=3).subtotal() == 6.0


def test_make_item_extra():
    item = sample_item()
    assert item.color == "blue"
    assert item.price == 2.5


def test_snapshot_is_plain_dict():
    copy = snapshot(frozen_view({"a": 1}))
    assert type(copy) is dict
    assert copy == {"a": 1}
