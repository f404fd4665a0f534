import json

from k3walls.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def payload(out):
    return json.loads(out)


def test_rho_command(capsys):
    code, out, err = run_cli(capsys, "rho", "--g", "5", "--r", "1", "--d", "3")
    assert code == 0
    assert payload(out)["result"] == {"rho": -1}
    assert "rho" in err


def test_rho_k_example(capsys):
    code, out, _ = run_cli(capsys, "rho-k", "--g", "5", "--k", "2", "--r", "1", "--d", "3")
    assert code == 0
    result = payload(out)["result"]
    assert result["rho_k"] == 1
    assert result["argmax_ell"] == [1]


def test_walls_example(capsys):
    code, out, _ = run_cli(
        capsys, "walls", "--g", "3", "--k", "2", "--eps", "1/10",
        "--v", "0,1,0,-1", "--type", "[[1,1]]",
    )
    assert code == 0
    walls = payload(out)["result"]["walls"]
    assert {"w": "25/132", "kind": "line_bundle", "e": 1,
            "destabilizer": {"r": 1, "x": 0, "y": 1, "s": 1}} == walls[0]


def test_walls_default_eps(capsys):
    code, out, _ = run_cli(capsys, "walls", "--g", "3", "--k", "2", "--v", "0,1,0,-1",
                           "--type", "[[1,1]]")
    assert code == 0
    result = payload(out)["result"]
    # heuristic for (g=3, k=2, a0=0): M = 4, so min(2/9, 1/2)/2
    assert result["eps"] == "1/9"
    assert result["walls"][0]["kind"] == "line_bundle"


def test_tableaux_example(capsys):
    code, out, _ = run_cli(capsys, "tableaux", "--g", "2", "--k", "2", "--r", "1", "--d", "1")
    assert code == 0
    result = payload(out)["result"]
    assert result["feasible"] is False
    assert result["rho_k"] == -1


def test_decompose_plain(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--r", "7", "--ell", "5")
    assert code == 0
    result = payload(out)["result"]
    assert (result["e"], result["m1"], result["m2"]) == (1, 2, 1)
    assert "degeneracy" not in result


def test_decompose_with_context(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--r", "1", "--ell", "1",
        "--g", "5", "--k", "2", "--d", "3",
    )
    assert code == 0
    block = payload(out)["result"]["degeneracy"]
    assert block["expected_dim"] == 1
    assert block["s"] == 4
    assert "h0" in block["h0_conditions"]


def test_types_command(capsys):
    code, out, _ = run_cli(
        capsys, "types", "--g", "5", "--k", "2", "--v", "0,1,0,-1", "--r", "1",
    )
    assert code == 0
    result = payload(out)["result"]
    assert [item["type"] for item in result["items"]] == [[[0, 2]], [[1, 1]], [[1, 1], [0, 1]]]
    dims = {json.dumps(item["type"]): item["dim"] for item in result["items"]}
    assert dims["[[0, 2]]"] == 4
    ells = [item["ell"] for item in result["items"]]
    assert ells == [0, 1, 0]
    assert all(item["verdict"] in ("non_empty", "empty_by_necessity", "unknown")
               for item in result["items"])


def test_chain_command(capsys):
    code, out, _ = run_cli(capsys, "chain", "--g", "4", "--k", "3", "--r", "1", "--d", "3")
    assert code == 0
    result = payload(out)["result"]
    assert len(result["components"]) == 4
    assert result["report"]["ok"] is True
    assert result["report"]["total_adjusted"] == 0


def test_verify_command(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "lattice", "--max-g", "4", "--max-k", "3")
    assert code == 0
    result = payload(out)["result"]
    assert result["failed"] == 0
    assert "PASS" in err


def test_verify_all_full_scale(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "all", "--max-g", "8", "--max-k", "5")
    assert code == 0
    result = payload(out)["result"]
    assert result["failed"] == 0
    assert result["passed"] == 22
    assert err.count("PASS") >= 22


def test_verify_exit_two_on_failure(capsys, monkeypatch):
    from k3walls import verify
    from k3walls.verify import CheckResult

    def check_always_fails(max_g, max_k):
        return CheckResult("lattice.zzz_injected", False, "deliberate failure")

    monkeypatch.setitem(verify.CHECKS, "lattice", verify.CHECKS["lattice"] + [check_always_fails])
    code, out, err = run_cli(capsys, "verify", "--suite", "lattice", "--max-g", "3", "--max-k", "2")
    assert code == 2
    assert payload(out)["result"]["failed"] == 1
    assert "FAIL lattice.zzz_injected" in err


def test_exit_code_on_bad_flag(capsys):
    code, out, _ = run_cli(capsys, "rho-k", "--g", "5", "--k", "2", "--r", "1")
    assert code == 1
    assert payload(out)["error"]["code"] == "bad_usage"


def test_exit_code_on_unknown_subcommand(capsys):
    code, out, _ = run_cli(capsys, "frobnicate")
    assert code == 1


def test_exit_code_on_bad_rational(capsys):
    code, out, _ = run_cli(
        capsys, "walls", "--g", "3", "--k", "2", "--eps", "1/0",
        "--v", "0,1,0,-1", "--type", "[[1,1]]",
    )
    assert code == 1
    assert payload(out)["error"]["code"] == "bad_rational"


def test_exit_code_on_domain_error(capsys):
    code, out, _ = run_cli(capsys, "chain", "--g", "4", "--k", "2", "--r", "1", "--d", "3")
    assert code == 1
    assert payload(out)["error"]["code"] == "pencil_too_small"


def test_plot_walls_two_lines(capsys, tmp_path):
    out_path = tmp_path / "walls.svg"
    code, out, _ = run_cli(
        capsys, "plot-walls", "--g", "3", "--k", "2", "--eps", "1/10",
        "--v", "0,1,0,-1", "--type", "[[2,1],[1,1]]", "--out", str(out_path),
    )
    assert code == 0
    svg = out_path.read_text()
    assert svg.count('<line class="wall"') == 2
    assert '<path class="parabola"' in svg
    assert payload(out)["result"]["wall_count"] == 2


def test_plot_walls_projection_point(capsys, tmp_path):
    out_path = tmp_path / "proj.svg"
    code, out, _ = run_cli(
        capsys, "plot-walls", "--g", "3", "--k", "2", "--eps", "1/10",
        "--v", "1,0,1,1", "--out", str(out_path),
    )
    assert code == 0
    svg = out_path.read_text()
    assert '<circle class="projection"' in svg
    # the point sits at b = 5/11 in a (-1, 1) viewport: px = (5/11+1)/2*640
    assert 'cx="465.454545455"' in svg
    assert payload(out)["warnings"] == ["no walls requested; diagram shows the parabola only"]


def test_plot_walls_deterministic(capsys, tmp_path):
    args = ["plot-walls", "--g", "3", "--k", "2", "--eps", "1/10",
            "--v", "0,1,0,-1", "--type", "[[1,1]]"]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run_cli(capsys, *args, "--out", str(a))
    run_cli(capsys, *args, "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_json_output_is_sorted_and_stable(capsys):
    _, out1, _ = run_cli(capsys, "rho-k", "--g", "5", "--k", "2", "--r", "1", "--d", "3")
    _, out2, _ = run_cli(capsys, "rho-k", "--g", "5", "--k", "2", "--r", "1", "--d", "3")
    assert out1 == out2
    doc = payload(out1)
    assert doc["schema_version"] == "1"
    assert list(doc.keys()) == sorted(doc.keys())
