"""End-to-end run of the Hermitian code C(3Q) over GF(4)."""

import itertools

import pytest

from castle_codes.algebra.linalg import FieldVector
from castle_codes.codes.chain import CodeChain, decode_message, encode
from castle_codes.decoding.feng_rao import SyndromeState, build_context, decode
from castle_codes.oracle.brute_force import brute_min_distance


@pytest.fixture(scope="module")
def code(hermitian2_chain: CodeChain):
    """Provide C(3Q) on the Hermitian curve over GF(4)."""
    return hermitian2_chain.code_at(3)


def test_encode_transmit_decode(hermitian2_chain: CodeChain, code, golden_decode: dict) -> None:
    """Test the full pipeline on the worked message (1, 1, 1)."""
    field = hermitian2_chain.field
    codeword = encode(code, golden_decode["message"])
    assert list(codeword) == golden_decode["codeword"]

    received = codeword + FieldVector(field, golden_decode["error"])
    assert list(received) == golden_decode["received"]

    result = decode(build_context(hermitian2_chain, code.k), received)
    assert result.codeword == golden_decode["codeword"]
    assert result.error == golden_decode["error"]
    assert result.message == golden_decode["message"]
    assert result.syndromes == golden_decode["syndromes"]


def test_known_syndromes_come_from_dual_code(hermitian2_chain: CodeChain, code) -> None:
    """Test that the first n - k syndromes are checks by the dual code."""
    dual = hermitian2_chain.dual_code(3)
    codeword = encode(code, [1, 1, 1])
    assert all(not row.dot(codeword) for row in dual.row_vectors())

    ctx = build_context(hermitian2_chain, code.k)
    assert ctx.syndromes(codeword) == [0] * 5


def test_predicted_entries(hermitian2_chain: CodeChain, golden_decode: dict) -> None:
    """Test the predicted entries at every voting step of the worked example."""
    ctx = build_context(hermitian2_chain, 3)
    state = SyndromeState(ctx, FieldVector(ctx.field, golden_decode["received"]))
    expected = [
        {(3, 3): 3},
        {(3, 4): 1, (4, 3): 1},
        {(3, 6): 1, (4, 5): 1, (5, 4): 1, (6, 3): 1},
    ]
    winners = [2, 1, 1]
    for step, winner in zip(expected, winners):
        candidates = [pair for pair in ctx.nstar_sets[state.frontier] if state.is_candidate(*pair)]
        assert sorted(candidates) == sorted(step)
        for (i, j), value in step.items():
            assert state.predicted_entry(i, j) == value
        state.known.append(winner)
    assert state.known == golden_decode["syndromes"]


def test_all_messages_give_distinct_codewords(code) -> None:
    """Test that encoding is injective over all 64 messages."""
    words = {tuple(encode(code, list(m))) for m in itertools.product(range(4), repeat=3)}
    assert len(words) == 64


def test_every_codeword_decodes_to_its_message(code) -> None:
    """Test that decode_message inverts encode."""
    for message in itertools.product(range(4), repeat=3):
        assert list(decode_message(code, encode(code, list(message)))) == list(message)


def test_minimum_distance_matches_decoder(hermitian2_chain: CodeChain, code) -> None:
    """Test that the designed distance does not exceed the true distance."""
    ctx = build_context(hermitian2_chain, code.k)
    assert ctx.delta == 5
    assert brute_min_distance(code.generator) == 5
