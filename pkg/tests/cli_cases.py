"""Golden CLI invocations: (file stem, argv, expected exit code)."""

CASES = [
    ("kac", ["kac"], 0),
    ("kac_json", ["kac", "--window", "3", "--json"], 0),
    ("kac_rational", ["--t", "3/2", "kac", "--window", "3"], 0),
    ("singvec_1_1", ["singvec", "--r", "1", "--s", "1"], 0),
    ("singvec_2_1_json", ["singvec", "--r", "2", "--s", "1", "--json"], 0),
    ("singvec_2_2", ["singvec", "--r", "2", "--s", "2"], 0),
    ("singvec_3_1_rational_json", ["singvec", "--r", "3", "--s", "1", "--t", "-3/2", "--json"], 0),
    ("detect_h21", ["detect", "--h", "h(2,1)", "--max", "3"], 0),
    ("detect_expr_json", ["detect", "--h", "(3*t-2)/4", "--max", "3", "--json"], 0),
    ("detect_nonkac", ["detect", "--h", "t+7", "--max", "4"], 0),
    ("detect_zero", ["detect", "--h", "0", "--max", "1"], 0),
    ("embed_generic", ["embed", "--r", "2", "--s", "1"], 0),
    ("embed_chain", ["embed", "--t", "3/2", "--r", "2", "--s", "1"], 0),
    ("embed_braid_json", ["embed", "--t", "-3/2", "--r", "1", "--s", "1", "--json"], 0),
    ("c1dim_2_2", ["c1dim", "2,2"], 0),
    ("c1dim_3_2_json", ["c1dim", "3,2", "--json"], 0),
    ("fuse_12_12", ["fuse", "1,2", "1,2"], 0),
    ("fuse_12_12_json", ["fuse", "1,2", "1,2", "--json"], 0),
    ("fuse_22_22", ["fuse", "2,2", "2,2"], 0),
    ("fuse_31_14", ["fuse", "3,1", "1,4"], 0),
    ("monodromy_12", ["monodromy", "1,2"], 0),
    ("monodromy_23_json", ["monodromy", "2,3", "--x", "1,2", "--json"], 0),
    ("scan_4_json", ["scan", "--window", "4", "--json"], 0),
    ("scan_6", ["scan", "--window", "6"], 0),
    ("coset_0_0", ["coset", "--lambda", "0", "--mu", "0", "--order", "8"], 0),
    ("coset_1_2_json", ["coset", "--lambda", "1", "--mu", "2", "--order", "8", "--json"], 0),
    ("verify_ring_3", ["verify-ring", "--window", "3"], 0),
    ("verify_ring_2_json", ["verify-ring", "--window", "2", "--json"], 0),
    ("err_fuse_rational", ["--t", "3/2", "fuse", "1,2", "1,2"], 1),
    ("err_fuse_rational_json", ["fuse", "1,2", "1,2", "--t", "3/2", "--json"], 1),
    ("err_c1dim_rational", ["c1dim", "2,1", "--t", "2"], 1),
    ("err_t_zero", ["--t", "0", "kac"], 1),
    ("err_level_bound", ["detect", "--h", "0", "--max", "13"], 1),
    ("err_bad_t", ["--t", "abc", "kac"], 2),
    ("err_bad_label", ["fuse", "0,1", "1,2"], 2),
    ("err_parse_expr", ["detect", "--h", "t+", "--max", "2"], 2),
    ("err_no_command", [], 2),
]
