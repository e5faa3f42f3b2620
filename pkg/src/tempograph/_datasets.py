"""Embedded dataset manifest.

Names, timestamp units and expected counts for the eleven small/medium
built-in datasets and the eight large benchmark datasets.  ``reference``
holds the published index values (computed at the stated discretization)
for comparison; ``expected`` counts are what a correctly parsed copy of the
raw edge list must reproduce.

No canonical raw edge-list mirrors exist for these corpora, so ``url`` and
``sha256`` ship unset: deployments pin them through a manifest override
file (see ingest.load_manifest), and the checksum of an unpinned dataset is
recorded on first successful download and enforced afterwards.
"""

_DEFAULT_FORMAT: dict = {}

MANIFEST_ENTRIES: tuple[dict, ...] = (
    {
        "name": "reddit",
        "group": "builtin",
        "domain": "Social",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 10_984, "num_events": 627_447, "num_unique_edges": 78_516, "num_unique_steps": 669_065},
        "reference": {"reoccurrence": 0.250, "surprise": 0.280, "node_activity": 0.617, "novelty": 0.266, "discretization": "daily"},
    },
    {
        "name": "mooc",
        "group": "builtin",
        "domain": "Interaction",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 7_144, "num_events": 411_749, "num_unique_edges": 178_443, "num_unique_steps": 345_600},
        "reference": {"reoccurrence": 0.044, "surprise": 0.786, "node_activity": 0.161, "novelty": 0.755, "discretization": "daily"},
    },
    {
        "name": "lastfm",
        "group": "builtin",
        "domain": "Interaction",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 1_980, "num_events": 1_293_103, "num_unique_edges": 154_993, "num_unique_steps": 1_283_614},
        "reference": {"reoccurrence": 0.226, "surprise": 0.369, "node_activity": 0.630, "novelty": 0.332, "discretization": "monthly"},
    },
    {
        "name": "enron",
        "group": "builtin",
        "domain": "Social",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 184, "num_events": 125_235, "num_unique_edges": 3_125, "num_unique_steps": 22_632},
        "reference": {"reoccurrence": 0.255, "surprise": 0.369, "node_activity": 0.409, "novelty": 0.322, "discretization": "monthly"},
    },
    {
        "name": "social_evo",
        "group": "builtin",
        "domain": "Proximity",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 74, "num_events": 2_099_519, "num_unique_edges": 4_486, "num_unique_steps": 565_932},
        "reference": {"reoccurrence": 0.401, "surprise": 0.027, "node_activity": 0.806, "novelty": 0.127, "discretization": "weekly"},
    },
    {
        "name": "uci",
        "group": "builtin",
        "domain": "Social",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 1_899, "num_events": 59_835, "num_unique_edges": 20_296, "num_unique_steps": 58_911},
        "reference": {"reoccurrence": 0.037, "surprise": 0.796, "node_activity": 0.177, "novelty": 0.651, "discretization": "weekly"},
    },
    {
        "name": "flights",
        "group": "builtin",
        "domain": "Transport",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "days",
        "expected": {"num_nodes": 13_169, "num_events": 1_927_145, "num_unique_edges": 395_072, "num_unique_steps": 122},
        "reference": {"reoccurrence": 0.265, "surprise": 0.400, "node_activity": 0.348, "novelty": 0.194, "discretization": "daily"},
    },
    {
        "name": "can_parl",
        "group": "builtin",
        "domain": "Politics",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "years",
        "expected": {"num_nodes": 734, "num_events": 74_478, "num_unique_edges": 51_331, "num_unique_steps": 14},
        "reference": {"reoccurrence": 0.063, "surprise": 0.654, "node_activity": 0.458, "novelty": 0.673, "discretization": "yearly"},
    },
    {
        "name": "us_legis",
        "group": "builtin",
        "domain": "Politics",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "index",
        "expected": {"num_nodes": 225, "num_events": 60_396, "num_unique_edges": 26_423, "num_unique_steps": 12},
        "reference": {"reoccurrence": 0.173, "surprise": 0.475, "node_activity": 0.448, "novelty": 0.437, "discretization": "yearly"},
    },
    {
        "name": "un_vote",
        "group": "builtin",
        "domain": "Politics",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "years",
        "expected": {"num_nodes": 201, "num_events": 1_035_742, "num_unique_edges": 31_516, "num_unique_steps": 72},
        "reference": {"reoccurrence": 0.869, "surprise": 0.027, "node_activity": 0.709, "novelty": 0.056, "discretization": "yearly"},
    },
    {
        "name": "contact",
        "group": "builtin",
        "domain": "Proximity",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "index",
        "expected": {"num_nodes": 694, "num_events": 2_426_280, "num_unique_edges": 79_530, "num_unique_steps": 8_065},
        "reference": {"reoccurrence": 0.232, "surprise": 0.289, "node_activity": 0.698, "novelty": 0.422, "discretization": "daily"},
    },
    {
        "name": "tgbl-wiki",
        "group": "tgb",
        "domain": "Social",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 9_227, "num_events": 157_474, "num_unique_edges": 18_257, "num_unique_steps": 152_757},
        "reference": {"reoccurrence": 0.130, "surprise": 0.554, "node_activity": 0.160, "novelty": 0.475, "discretization": "daily"},
    },
    {
        "name": "tgbl-review",
        "group": "tgb",
        "domain": "Rating",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 352_637, "num_events": 4_873_540, "num_unique_edges": 4_730_223, "num_unique_steps": 6_865},
        "reference": {"reoccurrence": 0.0004, "surprise": 0.999, "node_activity": 0.249, "novelty": 0.999, "discretization": "yearly"},
    },
    {
        "name": "tgbl-coin",
        "group": "tgb",
        "domain": "Transaction",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 638_486, "num_events": 22_809_486, "num_unique_edges": 3_862_031, "num_unique_steps": 1_295_720},
        "reference": {"reoccurrence": 0.129, "surprise": 0.435, "node_activity": 0.233, "novelty": 0.430, "discretization": "weekly"},
    },
    {
        "name": "tgbl-comment",
        "group": "tgb",
        "domain": "Social",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 994_790, "num_events": 44_314_507, "num_unique_edges": 35_531_704, "num_unique_steps": 30_998_030},
        "reference": {"reoccurrence": 0.006, "surprise": 0.964, "node_activity": 0.054, "novelty": 0.910, "discretization": "monthly"},
    },
    {
        "name": "tgbl-flight",
        "group": "tgb",
        "domain": "Transport",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 18_143, "num_events": 67_169_570, "num_unique_edges": 2_309_707, "num_unique_steps": 1_385},
        "reference": {"reoccurrence": 0.295, "surprise": 0.363, "node_activity": 0.652, "novelty": 0.258, "discretization": "monthly"},
    },
    {
        "name": "tgbn-trade",
        "group": "tgb",
        "domain": "Trade",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "years",
        "expected": {"num_nodes": 255, "num_events": 507_497, "num_unique_edges": 34_211, "num_unique_steps": 32},
        "reference": {"reoccurrence": 0.702, "surprise": 0.088, "node_activity": 0.868, "novelty": 0.091, "discretization": "yearly"},
    },
    {
        "name": "tgbn-genre",
        "group": "tgb",
        "domain": "Interaction",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 992, "num_events": 17_858_395, "num_unique_edges": 133_758, "num_unique_steps": 133_758},
        "reference": {"reoccurrence": 0.411, "surprise": 0.246, "node_activity": 0.594, "novelty": 0.189, "discretization": "monthly"},
    },
    {
        "name": "tgbn-reddit",
        "group": "tgb",
        "domain": "Social",
        "url": None,
        "sha256": None,
        "format": _DEFAULT_FORMAT,
        "timestamp_unit": "unix_seconds",
        "expected": {"num_nodes": 11_068, "num_events": 27_174_118, "num_unique_edges": 516_669, "num_unique_steps": 21_889_537},
        "reference": {"reoccurrence": 0.465, "surprise": 0.211, "node_activity": 0.614, "novelty": 0.211, "discretization": "monthly"},
    },
)
