"""The fixed suite of CLI job specifications used for golden-file testing.

Each entry is (name, argv).  Golden outputs live in tests/golden/<name>.txt
and are regenerated by scripts/make_goldens.py; the determinism test requires
byte equality across repeated runs and across cache on/off.
"""

SL3_WEDGE = (
    '{"rank":2,"components":['
    '{"weight":1,"polys":[["1"],["0","1"],["0"]]},'
    '{"weight":2,"polys":[["1"],["0","1"],["0","0","1"]]}],'
    '"degrees":[1,2]}'
)
SL2_CUSP = (
    '{"rank":1,"components":['
    '{"weight":1,"polys":[["0","1"],["0","0","1"]]}],"degrees":[2]}'
)
SL2_LINE = (
    '{"rank":1,"components":['
    '{"weight":1,"polys":[["1"],["0","1"]]}],"degrees":[1]}'
)

JOBSPECS = [
    ("order_le_a1", ["order", "le", "--rank", "1",
                     "--w", "1@0", "--v", "e@0"]),
    ("order_le_a2", ["order", "le", "--rank", "2",
                     "--w", "1,2@0,0", "--v", "e@0,0"]),
    ("order_covers_a1", ["order", "covers", "--rank", "1", "--v", "e@0"]),
    ("order_covers_a2", ["order", "covers", "--rank", "2", "--v", "1@0,0"]),
    ("order_interval_a1", ["order", "interval", "--rank", "1",
                           "--v", "1@1", "--w", "e@0", "--radius", "2"]),
    ("order_interval_a2", ["order", "interval", "--rank", "2",
                           "--v", "e@1,1", "--w", "e@0,0", "--radius", "2"]),
    ("char_weyl_a1", ["char", "weyl", "--rank", "1", "--lam", "2"]),
    ("char_weyl_a2", ["char", "weyl", "--rank", "2", "--lam", "1,1"]),
    ("char_weyl_b2", ["char", "weyl", "--type", "B", "--rank", "2",
                      "--lam", "1,0"]),
    ("char_gweyl_a1_w0", ["char", "gweyl", "--rank", "1", "--w", "1@0",
                          "--lam", "1", "--window", "0:4"]),
    ("char_gweyl_a1_translated", ["char", "gweyl", "--rank", "1",
                                  "--w", "e@1", "--lam", "1",
                                  "--window", "0:3"]),
    ("char_gweyl_a2", ["char", "gweyl", "--rank", "2", "--w", "1,2,1@0,0",
                       "--lam", "1,0", "--window", "0:2"]),
    ("char_demazure_a1", ["char", "demazure", "--rank", "1", "--word", "1",
                          "--lam", "1", "--window", "0:1"]),
    ("char_demazure_a2", ["char", "demazure", "--rank", "2",
                          "--word", "1,2,1", "--lam", "1,1",
                          "--window", "0:1"]),
    ("char_demazure_affine", ["char", "demazure", "--rank", "1",
                              "--word", "1,0", "--lam", "1",
                              "--window", "-2:2"]),
    ("pieri_a1_identity", ["pieri", "--rank", "1", "--w", "e@0",
                           "--lam", "1", "--window", "0:2", "--depth", "3"]),
    ("pieri_a1_s1", ["pieri", "--rank", "1", "--w", "1@0", "--lam", "2",
                     "--window", "0:2", "--depth", "3"]),
    ("pieri_a2_rho", ["pieri", "--rank", "2", "--w", "e@0,0", "--lam", "1,1",
                      "--window", "0:1", "--depth", "2"]),
    ("h0_p3_linear", ["h0", "--rank", "1", "--v", "1@1", "--w", "e@0",
                      "--lam", "1"]),
    ("h0_p5_linear", ["h0", "--rank", "1", "--v", "1@2", "--w", "e@0",
                      "--lam", "1"]),
    ("h0_a2_interval", ["h0", "--rank", "2", "--v", "1,2,1@1,1",
                        "--w", "e@0,0", "--lam", "1,1"]),
    ("qmap_validate", ["qmap", "validate", "--rank", "2",
                       "--data", SL3_WEDGE]),
    ("qmap_defect", ["qmap", "defect", "--rank", "1", "--data", SL2_CUSP]),
    ("qmap_eval_inf", ["qmap", "eval", "--rank", "1", "--at", "inf",
                       "--data", SL2_LINE]),
    ("dim_richardson_a2", ["dim", "richardson", "--rank", "2",
                           "--v", "1,2,1@1,1", "--w", "e@0,0"]),
]

assert len(JOBSPECS) == 25
