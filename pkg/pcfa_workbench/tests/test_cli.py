import csv
import io

import pytest

from pcfa_workbench.core import print_system
from pcfa_workbench.gallery import build_wbw
from pcfa_workbench.oca import build_signal_oca, encode_valc, print_oca
from pcfa_workbench.oca.catalog import build_sample_oca

pytestmark = pytest.mark.integration


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_run_member(cli):
    code, out, _ = cli("run", "expo", "$abaa&")
    assert code == 0
    assert out.splitlines() == ["verdict=ACCEPT", "steps=13", "comms=2", "halt=STUCK_COMPONENT"]


def test_run_trace(cli):
    code, out, _ = cli("run", "expo", "$abaa&", "--trace")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("clock=")]
    assert rows[0].startswith("clock=0 kind=MOVE 1:s0_1@0 2:s0_2@0")
    communicate = [row for row in rows if "kind=COMMUNICATE" in row]
    assert communicate[0].startswith("clock=6 kind=COMMUNICATE 1:q2@")
    assert communicate[0].endswith("events=1<-2:s_&(reset)")
    assert len(communicate) == 2
    assert communicate[1] == "clock=8 kind=COMMUNICATE 1:q2@3 2:s_END@6 events=1<-2:s_END(reset)"
    assert rows[-1].startswith("clock=13 kind=HALT")
    assert out.splitlines()[len(rows):] == ["verdict=ACCEPT", "steps=13", "comms=2", "halt=STUCK_COMPONENT"]


def test_run_with_cutoff(cli):
    code, out, _ = cli("run", "expo", "$abaa&", "--max-steps", 5, "--trace")
    assert code == 1
    assert "verdict=REJECT_CUTOFF" in out
    assert [line for line in out.splitlines() if line.startswith("clock=")][-1].startswith("clock=5 kind=CUTOFF")


def test_run_system_file(cli, tmp_path):
    path = tmp_path / "wbw.pcfa"
    path.write_text(print_system(build_wbw()), encoding="utf-8")
    code, out, _ = cli("run", path, "0b0")
    assert code == 0
    assert "comms=2" in out


def test_decide(cli):
    code, out, _ = cli("decide", "expo", "$ab&")
    assert code == 1
    assert out.splitlines()[0] == "verdict=REJECT_HALT"
    code, out, _ = cli("decide", "poly", "$abaaa&")
    assert code == 0
    assert "comms=2" in out


def test_sweep_expo(cli):
    code, out, _ = cli("sweep", "expo", "expo", "1..5")
    assert code == 0
    rows = _rows(out)
    assert rows[0] == ["m", "len", "verdict", "steps", "comms", "bound", "ratio"]
    assert rows[1] == ["1", "6", "ACCEPT", "13", "2", "", ""]
    assert [row[4] for row in rows[1:]] == ["2", "3", "4", "5", "6"]
    assert [row[1] for row in rows[1:]] == ["6", "11", "20", "37", "70"]


def test_sweep_bound(cli):
    code, out, _ = cli("sweep", "expo", "expo", "1..2", "--bound", "log2")
    assert code == 0
    assert _rows(out)[1][5:] == ["2.584963", "0.773706"]


def test_sweep_word_copy(cli):
    code, out, _ = cli("sweep", "expo-wbw", "expo-wbw", "1..4", "--payload", "1")
    assert code == 0
    rows = _rows(out)[1:]
    assert [row[4] for row in rows] == ["3", "5", "7", "9"]
    assert all(row[2] == "ACCEPT" for row in rows)


@pytest.mark.slow
def test_sweep_in_parallel(cli):
    code, out, _ = cli("--workers", 2, "sweep", "wbw", "wbw", "1..4", "--payload", "10")
    assert code == 0
    assert [row[4] for row in _rows(out)[1:]] == ["2", "3", "4", "5"]


def test_crosscheck(cli):
    code, out, _ = cli("crosscheck", "expo", "expo", "--max-len", 6)
    assert code == 0
    assert out.splitlines() == ["5461 words up to length 6, 0 disagreements; accepted by system 1, by oracle 1"]


def test_crosscheck_disjoint_alphabet(cli):
    code, out, _ = cli("crosscheck", "expo", "expo", "--max-len", 4, "--alphabet", "0,1,b")
    assert code == 0
    assert out.strip().endswith("0 accepted words on either side")


def test_crosscheck_disagreement(cli):
    code, out, _ = cli("crosscheck", "expo", "wbw", "--max-len", 4, "--alphabet", "01b")
    assert code == 1
    lines = out.splitlines()
    assert lines[1] == "disagree word='0b0' system=ALPHABET_VIOLATION oracle=ACCEPT"
    assert len(lines) == 3


def test_gallery_list(cli):
    code, out, _ = cli("gallery", "list")
    assert code == 0
    names = {line.split("\t")[0]: line.split("\t") for line in out.splitlines()}
    assert names["expo"][1:3] == ["system", "expo"]
    assert names["expo-wbw-as-printed"][1:3] == ["system", "expo-wbw"]
    assert names["oca-sample"][1:3] == ["automaton", "-"]


def test_gallery_emit(cli):
    code, out, _ = cli("gallery", "emit", "wbw")
    assert code == 0
    assert out == print_system(build_wbw())
    code, out, _ = cli("gallery", "emit", "oca-signal")
    assert out == print_oca(build_signal_oca())


def test_oca_run(cli, tmp_path):
    assert cli("oca", "run", "oca-signal", "aaaa")[:2] == (0, "accepted_at=4\n")
    assert cli("oca", "run", "oca-sample", "dcc")[:2] == (1, "accepted_at=none horizon=36\n")
    assert cli("oca", "run", "oca-signal", "aaaa", "--max-t", 2)[:2] == (1, "accepted_at=none horizon=2\n")
    path = tmp_path / "signal.oca"
    path.write_text(print_oca(build_signal_oca()), encoding="utf-8")
    assert cli("oca", "run", path, "aa")[:2] == (0, "accepted_at=2\n")


def test_oca_valc(cli):
    code, out, _ = cli("oca", "valc", "oca-sample", "cdd")
    assert code == 0
    encoding, summary = out.splitlines()
    assert encoding == encode_valc(build_sample_oca(), "cdd").serialize()
    assert summary == "pairs=39 n=3 t=3 expected=39"


def test_oca_check(cli, tmp_path):
    tokens = encode_valc(build_sample_oca(), "cdd").tokens()
    good = tmp_path / "good.valc"
    good.write_text("# c d d\n" + "\n".join(tokens) + "\n", encoding="utf-8")
    assert cli("oca", "check", "oca-sample", good)[:2] == (0, "VALID n=3 t=3\n")
    bad = tmp_path / "bad.valc"
    bad.write_text(" ".join(tokens[:-4]) + "\n", encoding="utf-8")
    assert cli("oca", "check", "oca-sample", bad)[:2] == (1, "INVALID\n")


@pytest.mark.parametrize("argv", [
    ("run", "no-such-system", "ab"),
    ("run", "expo", "$axb&"),
    ("sweep", "expo", "expo", "5..1"),
    ("sweep", "expo", "valc-prime", "1..2"),
    ("sweep", "expo", "expo", "1..2", "--bound", "cubic"),
    ("gallery", "emit", "nothing"),
    ("oca", "valc", "oca-signal", "a"),
    ("--workers", "0", "gallery", "list"),
    ("--log-level", "LOUD", "gallery", "list"),
])
def test_errors_exit_with_two(cli, argv):
    code, out, err = cli(*argv)
    assert code == 2
    assert "error: " in err
