import io
import json

from curlseq.cli import cli_dispatch


def run(argv):
    out = io.StringIO()
    code = cli_dispatch(argv, out)
    return code, out.getvalue()


def test_generate_plain():
    code, text = run(["generate", "--m", "1", "--count", "9"])
    assert code == 0
    assert text == "1 1 2 1 1 2 2 2 3\n"


def test_generate_fast_engine_matches_reference():
    _, ref = run(["generate", "--m", "2", "--count", "200"])
    _, fast = run(["generate", "--m", "2", "--count", "200", "--engine", "fast"])
    assert ref == fast


def test_generate_formats(golden):
    code, text = run(["generate", "--count", "9", "--format", "json"])
    assert code == 0 and json.loads(text) == [1, 1, 2, 1, 1, 2, 2, 2, 3]
    code, text = run(["generate", "--count", "3", "--format", "bfile"])
    assert text == "1 1\n2 1\n3 2\n"
    code, text = run(["generate", "--count", "2", "--format", "csv"])
    assert text == "n,value\n1,1\n2,1\n"


def test_transform_named():
    code, text = run(["transform", "--input", "named:thue_morse", "--count", "16"])
    assert code == 0
    assert text.split() == "1 1 1 2 1 1 2 2 1 2 1 2 2 1 2 2".split()


def test_transform_from_file(tmp_path):
    p = tmp_path / "word.txt"
    p.write_text("2 2 2 3\n")
    code, text = run(["transform", "--input", str(p), "--count", "4"])
    assert code == 0
    assert text == "1 1 2 3\n"


def test_transform_missing_file():
    code, _ = run(["transform", "--input", "/nonexistent/word.txt", "--count", "4"])
    assert code == 2


def test_decompose():
    code, text = run(["decompose", "--m", "1", "--blocks", "3"])
    assert code == 0
    assert "glue 2 (length 3): 2 2 3" in text
    assert "block 2 (length 3): 1 1 2" in text


def test_glue():
    code, text = run(["glue", "--m", "2", "--count", "9"])
    assert code == 0
    assert text.split() == "1 1 3 1 1 3 1 1 9".split()


def test_table_beta(golden):
    code, text = run(["table", "--which", "beta", "--m", "2", "--n", "8"])
    assert code == 0
    assert [int(v) for v in text.split()] == golden["beta"]["2"]


def test_table_records():
    code, text = run(["table", "--which", "records", "--m", "1", "--n", "48"])
    assert code == 0
    assert text.splitlines()[0] == "0 1 (first at 1)"
    assert "581" in text


def test_table_rho():
    code, text = run(["table", "--which", "rho", "--m", "2", "--n", "32"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "rho: 1 3 9 31"
    assert lines[1] == "splits: 32"
    assert lines[2] == "mismatches: 0"


def test_verify_structure():
    code, text = run(["verify", "--which", "structure", "--m", "1", "--n", "5"])
    assert code == 0
    assert "FAIL" not in text


def test_verify_closedforms():
    code, text = run(["verify", "--which", "closedforms", "--m", "2", "--n", "8"])
    assert code == 0
    assert "FAIL" not in text


def test_verify_rec1():
    code, text = run(["verify", "--which", "rec1", "--m", "1", "--n", "5"])
    assert code == 0
    assert "residual=0" in text


def test_first_direct():
    code, text = run(["first", "--t", "3", "--m", "1"])
    assert code == 0
    assert "position 9" in text


def test_first_exact_chain(golden):
    code, text = run(["first", "--t", "5", "--m", "2", "--exact-chain"])
    assert code == 0
    assert golden["x2_exact"] in text
    assert "mu = 79.045" in text
    assert "23.27" in text


def test_first_tower():
    code, text = run(["first", "--t", "5", "--m", "1"])
    assert code == 0
    assert "levels (bottom-up): 2 2 3 4" in text
    code, text = run(["first", "--t", "6", "--m", "1"])
    assert code == 0
    assert "not evaluated" in text


def test_search_csv():
    code, text = run(["search", "--n", "2"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "n,max,avg,avg_num,avg_den,argmax_count,first_argmax"
    assert lines[1] == "2,4,2.75,11,4,1,2 2"


def test_search_json_range():
    code, text = run(["search", "--n", "1", "--n-max", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert [row["max"] for row in payload] == [1, 4, 5]
    assert payload[1]["avg"] == "2.75"


def test_search_guard_requires_long_run_flag():
    code, _ = run(["search", "--n", "21"])
    assert code == 2


def test_variant_2d(golden):
    code, text = run(["variant", "--which", "2d", "--rows", "6", "--cols", "14"])
    assert code == 0
    rows = [[int(v) for v in line.split()] for line in text.strip().splitlines()]
    assert rows == golden["grid_6x14"]


def test_variant_sequences(golden):
    code, text = run(["variant", "--which", "greedy", "--count", "32"])
    assert code == 0
    assert [int(v) for v in text.split()] == golden["greedy_32"]


def test_usage_errors():
    code, _ = run(["generate"])  # missing required --count
    assert code == 2
    code, _ = run(["no-such-command"])
    assert code == 2
    code, _ = run(["generate", "--count", "0"])
    assert code == 2
