import json

import pytest

from speedcops.certificates import (
    FORMAT,
    CertificateError,
    dumps,
    recording,
    robber_json,
    strategy_from_json,
    strategy_json,
)
from speedcops.game import VariantSpec
from speedcops.generators import gen_ia_gap
from speedcops.graph import cycle_graph
from speedcops.solver import cops_win, verify_robber, verify_strategy


@pytest.mark.parametrize("code,k", [("va_1", 3), ("cm-vl_inf", 3), ("rm-il_2", 3), ("ia_inf", 3)])
def test_strategy_round_trip(code, k):
    G = cycle_graph(5)
    variant = VariantSpec.parse(code)
    strat = cops_win(G, variant, k).certificate
    assert verify_strategy(G, variant, strat, k).cops_win
    doc = json.loads(dumps(strategy_json(G, strat)))
    assert doc["format"] == FORMAT
    H, again = strategy_from_json(doc)
    assert H == G
    assert verify_strategy(H, again.variant, again, again.k).cops_win
    assert dumps(strategy_json(H, again)) == dumps(strategy_json(G, strat))


def test_rule_strategy_serializes_reached_states():
    G = gen_ia_gap(1, 1, 4)
    variant = VariantSpec.parse("ia_1")
    strat = cops_win(G, variant, 4).certificate
    verify_strategy(G, variant, strat, 4)
    _, again = strategy_from_json(strategy_json(G, strat))
    assert verify_strategy(G, variant, again, 4).cops_win


def test_robber_replies_recorded():
    G = cycle_graph(5)
    variant = VariantSpec.parse("va_1")
    cert = cops_win(G, variant, 2).certificate
    rec, replies = recording(cert)
    assert verify_robber(G, variant, rec, 2)
    doc = robber_json(G, cert, replies)
    assert doc["start"] == cert.start and doc["replies"]


def test_rejects_other_documents():
    with pytest.raises(CertificateError):
        strategy_from_json({"format": FORMAT, "kind": "verdict"})
    with pytest.raises(CertificateError):
        strategy_from_json({"kind": "cop-strategy"})
