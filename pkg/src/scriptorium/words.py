"""Bundled word list for project identifiers.

Two thousand common dictionary words; project ids sample four of
these uniformly without replacement from a seedable generator.
"""

WORDS: tuple[str, ...] = (
    "abacus", "abbey", "ability", "able", "absence", "absorb", "absurd", "accord",
    "accordion", "acorns", "acres", "activity", "acumen", "admiral", "advice",
    "aged", "agile", "airship", "airy", "alchemist", "alcove", "alert", "alley",
    "alleys", "almond", "alpaca", "amber", "ampere", "ample", "amuse", "anchor",
    "ancient", "angler", "angling", "anklet", "anorak", "answer", "antelope",
    "antenna", "anthems", "antics", "antique", "anvil", "anvils", "apogee", "applaud",
    "apple", "apricot", "apron", "arbors", "arcade", "archer", "archipelago",
    "architect", "ardent", "ardor", "arena", "armadillo", "armory", "arrange",
    "arrival", "arrow", "artisan", "ascend", "ashes", "assemble", "assure", "athlete",
    "atlas", "atom", "atomic", "atrium", "attic", "attorney", "audacity", "august",
    "aunt", "austere", "author", "avenue", "aviator", "avid", "awake", "awaken",
    "awnings", "axis", "axle", "baboon", "bacon", "badger", "badges", "bagel",
    "baker", "bakery", "balance", "bales", "ballad", "balloon", "ballot", "balmy",
    "bamboo", "banana", "banjo", "bank", "banner", "banners", "banter", "bard",
    "bargain", "barista", "barley", "barn", "barrels", "bartender", "bashful",
    "basic", "basil", "basket", "baskets", "bass", "basting", "bastion", "bathtub",
    "baton", "bayou", "bazaar", "beach", "beads", "beaker", "beams", "bean",
    "beanie", "beaver", "beckon", "bedlam", "bee", "beekeeper", "befriend", "behold",
    "believe", "bell", "bellhop", "belong", "bench", "berries", "berry", "bestow",
    "billboard", "binding", "biologist", "biplane", "birch", "biscuit", "bismuth",
    "bistro", "blacksmith", "blanket", "blazing", "blender", "blimp", "blinking",
    "bliss", "blizzard", "blooming", "bluebell", "blueberry", "blueprint", "bluffing",
    "boards", "bobbin", "bobbing", "bobcat", "bodice", "bog", "bolster", "bolts",
    "bonanza", "bongos", "bonnet", "bookcase", "bookends", "booths", "borax",
    "borders", "botanist", "bottle", "boughs", "boulevard", "bounce", "bounty",
    "bowing", "bowler", "bows", "bowtie", "boxes", "bracelet", "bracing", "braid",
    "braiding", "bramble", "bravado", "brave", "bread", "breeze", "breezy", "brevity",
    "brew", "brewing", "bridge", "bridging", "brief", "brighten", "brisk", "bristles",
    "broccoli", "bronze", "brooch", "brooks", "broom", "brownie", "browse", "brush",
    "bubbly", "bucket", "buckle", "buckles", "budding", "buds", "buffalo", "bugle",
    "build", "builder", "bull", "bulletin", "bundles", "bundling", "bunk", "buoy",
    "bureau", "burly", "burnish", "burrows", "bushels", "bushy", "bustling",
    "busy", "butcher", "butte", "butter", "buttonhole", "buttons", "buzzing",
    "cabbage", "cabinet", "cable", "cables", "cackling", "cafe", "cairns", "calamity",
    "calcium", "calculus", "caliper", "calm", "camera", "camping", "campus",
    "canary", "candid", "candles", "candor", "candy", "cannon", "canoe", "canyon",
    "canyons", "cape", "capes", "capitol", "capsule", "captain", "carafe", "caravan",
    "carbon", "cardinal", "carding", "carefree", "cargo", "carols", "carp", "carpenter",
    "carpet", "carrot", "cart", "carts", "carve", "carver", "carwash", "cascade",
    "cashew", "cashier", "castle", "catamaran", "cattle", "cauldron", "causeway",
    "cavern", "ceiling", "celery", "cellar", "cellars", "cellist", "census",
    "cereal", "chair", "chalice", "chapel", "chariot", "charioteer", "charm",
    "chart", "charter", "chasing", "chateau", "cheering", "cheery", "cheese",
    "chef", "chemist", "cherry", "chestnut", "chili", "chimes", "chiming", "chinos",
    "chipmunk", "chirping", "chisel", "chive", "chocolate", "chorus", "chowder",
    "chuckle", "chums", "cider", "cinders", "cinema", "cipher", "circuit", "citrons",
    "city", "civic", "clamor", "clamp", "clarinet", "clarity", "classy", "cleat",
    "cleaver", "clever", "clicking", "cliff", "climbing", "clinking", "cloak",
    "cloaks", "clock", "closet", "cloth", "clove", "clover", "clovers", "coach",
    "coachman", "coastal", "coaster", "coasting", "cobbler", "cobwebs", "cocoa",
    "coconut", "cod", "coffee", "cog", "coin", "coining", "coins", "collect",
    "colonnade", "colossal", "colt", "combs", "comets", "comfort", "compass",
    "compose", "composer", "conductor", "conjure", "constable", "consul", "convene",
    "conveyor", "cookie", "copper", "cordial", "cork", "cormorant", "corn", "corset",
    "cosine", "cosmic", "cougar", "courage", "courtyard", "cousin", "cove", "cowboy",
    "coyote", "crab", "cracker", "cradle", "crafting", "crafty", "crane", "crate",
    "crater", "cravat", "crayon", "creaky", "cream", "credence", "creeks", "crepe",
    "crimson", "crisp", "crockery", "crooning", "crossing", "crow", "crowbar",
    "crucible", "cruising", "crumbs", "cub", "cubit", "cucumber", "cufflink",
    "culottes", "cupboard", "cupcake", "curator", "curling", "current", "curtain",
    "cushion", "custard", "cyclone", "cymbal", "cypress", "dabbling", "dagger",
    "daisies", "daisy", "dancer", "dancing", "dapper", "darting", "dashing",
    "dawn", "dazzle", "dazzling", "decanter", "decent", "decks", "decode", "decorum",
    "dedicate", "deed", "deft", "degree", "delight", "dell", "delta", "demeanor",
    "denial", "denim", "density", "dentist", "depot", "deputy", "derrick", "design",
    "desire", "destiny", "detour", "devise", "dew", "diagram", "dialing", "dice",
    "digging", "dignity", "diligence", "dimples", "din", "dinghy", "dingo", "diode",
    "dipping", "dirigible", "discover", "discuss", "dishrag", "diving", "dizzy",
    "docile", "dock", "docket", "doctor", "doe", "dojo", "dollops", "dolly",
    "dome", "dominoes", "donkey", "donut", "doodle", "doormat", "dormant", "dossier",
    "dough", "doughty", "dozing", "drafting", "draper", "drawbridge", "drawer",
    "dream", "dresser", "drifting", "driftwood", "drill", "drummer", "drumming",
    "duck", "duckling", "duke", "dune", "dunes", "dusk", "dusky", "dusting",
    "dusty", "duty", "eager", "eagle", "early", "earnest", "earring", "ease",
    "easel", "ebb", "echoes", "echoing", "eddy", "edict", "editor", "eerie",
    "effort", "egret", "elan", "elastic", "electron", "elegy", "elephant", "elk",
    "ellipse", "eloquence", "embark", "ember", "embers", "emblem", "embrace",
    "emerald", "emphases", "emu", "enchant", "energy", "engaged", "engineer",
    "enjoy", "enlist", "entrust", "envelope", "envy", "enzyme", "epaulet", "epilogue",
    "epoch", "equation", "equinox", "errand", "essence", "estate", "estuary",
    "etching", "ethos", "evolve", "ewe", "explore", "explorer", "extras", "fabled",
    "fables", "fading", "falcon", "falconer", "fancy", "fanfare", "farmer", "farming",
    "farms", "fathom", "faucet", "feathers", "fedora", "feisty", "fencing", "fender",
    "fern", "ferns", "ferocity", "ferry", "ferryman", "fervor", "festive", "fetching",
    "fiasco", "fickle", "fiddles", "fiddling", "fields", "fig", "figs", "finesse",
    "fireplace", "fisherman", "fizzing", "fjord", "flagons", "flagpole", "flair",
    "flamingo", "flannel", "flashing", "flashlight", "flatboat", "fleece", "fleet",
    "flicking", "flint", "flinty", "floating", "flocking", "flour", "flourish",
    "flowing", "fluffy", "fluke", "flutes", "fluttering", "foal", "foggy", "follow",
    "fond", "foothills", "footstool", "forest", "forester", "forging", "forgive",
    "fork", "fort", "fortress", "forum", "fossil", "fossils", "foundry", "fountain",
    "foxglove", "fracas", "frank", "free", "frenzy", "frigate", "frisky", "fritter",
    "frog", "frolicking", "frosting", "frosty", "frugal", "fulcrum", "funnel",
    "furor", "fusion", "gables", "gaiter", "gala", "gallant", "galleon", "gallery",
    "gambit", "gamma", "garage", "gardener", "gardening", "gargle", "gargling",
    "garment", "garret", "garrison", "gasket", "gatekeeper", "gather", "gathering",
    "gauntlet", "gazebo", "gazelle", "gazing", "gearbox", "gecko", "general",
    "gentle", "geologist", "geyser", "giddy", "gilding", "gilled", "giraffe",
    "girder", "gist", "glacier", "glad", "glades", "gladiator", "glassblower",
    "glee", "gleeful", "glider", "gliding", "glimpse", "glisten", "glistening",
    "glossary", "glossy", "glove", "goalie", "goat", "goblets", "golden", "goldsmith",
    "gondola", "gong", "gorge", "gorilla", "gosling", "gown", "grace", "gradient",
    "grains", "granary", "grandeur", "grandma", "grange", "granite", "grapes",
    "graphs", "grapnel", "grater", "gratitude", "gravity", "grazing", "great",
    "greet", "griddle", "griddles", "grinning", "grit", "grocer", "groovy", "grotto",
    "grove", "groves", "grudge", "guava", "guide", "gull", "gulls", "gumbo",
    "gunner", "gushing", "gusto", "gusty", "habit", "hacienda", "hail", "hallway",
    "hamlet", "hammocks", "hamper", "hamster", "handle", "handy", "happy", "harbor",
    "harbors", "hardy", "hare", "harmony", "harp", "harpist", "harvest", "haste",
    "hatband", "hatch", "hatchet", "haven", "havoc", "hazelnut", "headband",
    "headland", "hearten", "hearty", "heather", "hedgehog", "hedges", "hefty",
    "helium", "hemline", "hen", "herald", "heron", "hidden", "highway", "hiking",
    "hillock", "hilltop", "hindsight", "hinges", "hippo", "hippodrome", "hog",
    "hoist", "homage", "honest", "honey", "hood", "hoodie", "hooves", "horizon",
    "horn", "hostel", "hotel", "houseboat", "hubris", "huge", "humid", "humility",
    "hummus", "hunch", "hunter", "hurricane", "hutch", "hydrant", "hydrogen",
    "hydroplane", "hymn", "ibis", "icy", "ideal", "idiom", "idle", "idyll", "iguana",
    "imagine", "immense", "impetus", "improve", "index", "indigo", "inertia",
    "inky", "inlet", "inn", "innkeeper", "insight", "inspector", "inspire", "intrigue",
    "invent", "inventor", "iris", "iron", "island", "isle", "islets", "itinerary",
    "ivy", "jacket", "jackpot", "jade", "jailer", "jalopy", "jangling", "janitor",
    "jargon", "jaunty", "javelin", "jelly", "jersey", "jest", "jesting", "jetty",
    "jigsaw", "jingling", "jockey", "jogging", "jolly", "joule", "journal", "journey",
    "joyful", "jubilee", "juggler", "juggling", "jugs", "jumper", "junction",
    "jungle", "juniper", "jurist", "kangaroo", "karma", "kebab", "keel", "keels",
    "keep", "keeping", "keg", "kelvin", "kennel", "kernels", "ketchup", "kettles",
    "keyhole", "kilt", "kind", "kindle", "kindness", "kingly", "kiosk", "kites",
    "kitten", "knack", "kneading", "knight", "knoll", "knolls", "kooky", "krypton",
    "labyrinth", "ladder", "ladders", "lagoon", "lagoons", "lake", "lambda",
    "lamp", "landing", "landlord", "lane", "lanterns", "lapel", "lapping", "large",
    "lasagna", "lasso", "latch", "laugh", "launch", "laurel", "lavender", "lavish",
    "lawyer", "leaflets", "leafy", "leaping", "learn", "lecturer", "ledge", "ledgers",
    "leek", "legacy", "legible", "leisure", "lemon", "lens", "lentil", "lettuce",
    "lever", "levity", "liberty", "librarian", "lichen", "lifeguard", "lighthouse",
    "lilting", "lily", "lime", "limerick", "limousine", "linen", "linguist",
    "lion", "listen", "lithe", "lively", "llama", "lobster", "locker", "locket",
    "locomotive", "lodge", "lofts", "logarithm", "logic", "loon", "looping",
    "lotus", "loyal", "lucid", "lucky", "lullaby", "luminous", "lunar", "lunging",
    "lustre", "lute", "lynx", "macaw", "machete", "magistrate", "magma", "magnet",
    "magnolia", "magpie", "major", "malice", "mallet", "mammoth", "mandolin",
    "manifest", "manor", "mantel", "mantis", "mantle", "mantra", "maple", "marbles",
    "marching", "mare", "marina", "market", "marsh", "marshal", "martin", "mason",
    "mast", "matrix", "mattress", "maxim", "meadow", "meadowland", "measure",
    "mechanic", "medallion", "medic", "medley", "megaphone", "melding", "mellow",
    "melon", "melons", "memo", "mending", "mentor", "mercury", "mercy", "merry",
    "mesa", "messenger", "methane", "metric", "micron", "microscope", "midge",
    "milkman", "mill", "miner", "mingle", "mingling", "minstrel", "minty", "mirth",
    "mischief", "missile", "misty", "mitten", "mixer", "mixing", "moccasin",
    "modest", "mold", "mole", "momentum", "monarch", "mongoose", "monocle", "monument",
    "moon", "moonbeam", "moose", "mop", "moraine", "moral", "morale", "mosaics",
    "mosque", "mossy", "motel", "moth", "motive", "motor", "mountain", "mounties",
    "mouse", "muffin", "muffler", "mule", "mulling", "munching", "murmuring",
    "muse", "mushroom", "mustang", "mustard", "myrtle", "mystique", "nadir",
    "napkin", "narrow", "natural", "nautical", "navigator", "neat", "nebula",
    "neon", "nephew", "nesting", "neutron", "newt", "nickel", "niece", "nightingale",
    "nimble", "nimbus", "nitrogen", "noble", "noodle", "nooks", "northern", "notary",
    "notches", "notion", "nougat", "nourish", "novelist", "nozzle", "nucleus",
    "nunnery", "nurse", "oak", "oaken", "oasis", "oath", "oatmeal", "oboe", "oboes",
    "observatory", "observe", "ocelot", "offer", "ohm", "omelet", "omen", "onion",
    "onyx", "opal", "operable", "optimism", "opus", "orange", "orbit", "orchard",
    "orchards", "orchid", "order", "orderly", "organ", "oriole", "ornate", "ostrich",
    "otter", "outcrop", "outgoing", "outpost", "oven", "overall", "overt", "owl",
    "oxbow", "oxygen", "oyster", "paddle", "paddles", "paddling", "pageant",
    "pagoda", "pail", "paint", "painter", "pajamas", "palace", "pamphlet", "panache",
    "pancake", "pane", "panning", "pantry", "pants", "papaya", "parachute", "parading",
    "parasol", "parcel", "parchment", "parka", "parley", "parody", "parrot",
    "parsley", "parson", "particle", "passport", "pasta", "pastel", "pathologist",
    "pathos", "patient", "patron", "pavilion", "peach", "peacock", "pear", "pebble",
    "pebbles", "pedal", "pedaling", "pediatrician", "peeking", "peg", "pendant",
    "pendulum", "peninsula", "pennants", "peony", "peppy", "perch", "perigee",
    "peril", "periscope", "persist", "petals", "petticoat", "petunia", "pewter",
    "pheasant", "phosphor", "pianist", "piccolo", "pickaxe", "pier", "pig", "piglet",
    "pike", "pillars", "pilot", "pinafore", "pineapple", "pines", "pinwheel",
    "piping", "pirate", "piston", "pitcher", "pivot", "pixel", "pizza", "placid",
    "plaid", "planet", "planks", "planter", "plateau", "platinum", "platter",
    "play", "playful", "plazas", "pleasant", "pleasure", "plight", "plotting",
    "plover", "plowing", "pluck", "plug", "plum", "plumes", "plush", "pocket",
    "podium", "poet", "polish", "polite", "polygon", "poncho", "pond", "ponds",
    "pony", "popcorn", "poppy", "porch", "porcupine", "porter", "portly", "possum",
    "postcard", "potato", "potter", "pouncing", "practice", "prairie", "prancing",
    "prank", "preacher", "precise", "prepare", "preserve", "president", "prestige",
    "pride", "primer", "printer", "prism", "prisms", "professor", "prologue",
    "propeller", "proper", "prophet", "protect", "proton", "provide", "prowess",
    "prowling", "prudent", "prune", "publisher", "pudding", "puddle", "puffing",
    "pug", "pulleys", "pulpit", "pulsar", "pulsing", "puma", "pumpkin", "punctual",
    "puppeteer", "puritan", "purring", "quail", "quaint", "quandary", "quarries",
    "quarry", "quasar", "quay", "quays", "quest", "question", "quick", "quicksand",
    "quiet", "quilting", "quilts", "quirky", "quiver", "quorum", "raccoon", "racing",
    "radar", "radiant", "radiator", "radium", "radius", "rafter", "rafting",
    "rafts", "railing", "rainbow", "raisin", "rake", "ram", "rampart", "ranch",
    "ranging", "rapid", "rapids", "rapture", "rare", "raspberry", "rat", "ratio",
    "ravine", "realm", "rebuke", "recess", "recipe", "redwood", "reeds", "reeling",
    "referee", "refine", "refrain", "refuge", "regalia", "regent", "reggae",
    "register", "reindeer", "relax", "relish", "remember", "remote", "renew",
    "repair", "reporter", "repose", "resolve", "respite", "reveal", "reverie",
    "revive", "rhino", "rhubarb", "ribbons", "rice", "rickshaw", "ridge", "ridges",
    "rigor", "rink", "rinsing", "riposte", "rippling", "riverbank", "rivers",
    "rivets", "roaring", "robe", "rocker", "rolling", "rookeries", "rooster",
    "roosting", "rose", "rosemary", "rosy", "rotunda", "rounding", "rowing",
    "rubies", "rudder", "rug", "rugged", "rural", "rushing", "rustling", "saber",
    "sable", "saddles", "saffron", "sagas", "sage", "sailing", "sails", "salad",
    "salmon", "salsa", "salute", "sandal", "sandpiper", "sandy", "sapphire",
    "sapphires", "sardine", "sarong", "satchel", "satire", "sauce", "saucer",
    "sauntering", "savanna", "savvy", "sawmill", "scarf", "scarlet", "schedule",
    "schism", "scholar", "scissors", "sconce", "scoop", "scooter", "scooting",
    "scout", "scribing", "scrolls", "scruple", "sculling", "sculptor", "scythe",
    "seaport", "search", "secrecy", "seeding", "seemly", "sentinel", "sentry",
    "sequoia", "serene", "serenity", "sesame", "settle", "sewing", "shady", "shallot",
    "share", "shark", "sharp", "shearing", "sheen", "shelf", "shells", "shelter",
    "sherbet", "sheriff", "shimmering", "shindig", "shine", "shining", "shiny",
    "shipyard", "shirt", "shoal", "shoelace", "shore", "shrewd", "shrimp", "shuffling",
    "shutters", "shuttle", "sibling", "sickle", "sieve", "signal", "silent",
    "silken", "sill", "silo", "simple", "sincere", "singing", "sink", "siren",
    "skating", "sketch", "skiff", "skiffs", "skillet", "skipper", "skipping",
    "skunk", "slacks", "sled", "sledge", "sleek", "sleighs", "slick", "sliding",
    "sloop", "sloops", "sloth", "slug", "slumber", "smile", "smith", "smooth",
    "snail", "snappy", "snipe", "snorkel", "snowplow", "snug", "soap", "sober",
    "sock", "solace", "solar", "soldier", "solid", "solstice", "sombrero", "sonic",
    "sonnet", "soprano", "sorbet", "sorting", "soup", "southern", "spa", "spade",
    "sparking", "sparkle", "sparrow", "speak", "spear", "speedy", "sphere", "spider",
    "spigot", "spinach", "spinning", "spiral", "spires", "splashing", "splendor",
    "spool", "spools", "sprain", "sprigs", "sprinting", "sprouting", "spruce",
    "spruces", "spur", "squash", "squinting", "squirrel", "stable", "stadium",
    "stagehand", "stamina", "stamping", "stanza", "starry", "stately", "stationer",
    "steady", "stealth", "steaming", "steeples", "steppe", "sterling", "stew",
    "stigma", "stitches", "stoat", "stool", "stopper", "stout", "stove", "stratus",
    "strawberry", "stream", "streetcar", "strife", "strolling", "strong", "strumming",
    "study", "stupor", "stylus", "suave", "submarine", "suburb", "subway", "sugar",
    "sulfur", "summit", "sundae", "sundial", "sunflower", "sunny", "sunrise",
    "supreme", "sure", "surgeon", "surprise", "surveyor", "suspense", "svelte",
    "swamp", "swan", "sweater", "sweet", "swift", "swimming", "swimsuit", "swinging",
    "swirling", "swivel", "sycamore", "syllabus", "symbol", "syrup", "tableau",
    "tack", "taco", "tact", "taffy", "tailor", "tally", "tambourine", "tame",
    "tangent", "tangerine", "tanner", "tapioca", "tapir", "tarragon", "tassel",
    "tavern", "teach", "teacher", "teal", "teapot", "temple", "tempo", "tenacity",
    "tenor", "tepees", "tern", "terrace", "tesla", "theater", "theme", "thermos",
    "thesis", "thicket", "thimble", "thistle", "thrift", "thrill", "thriving",
    "thunder", "thyme", "tick", "ticking", "tide", "tidy", "tiger", "tiller",
    "tilling", "timbers", "tinker", "tinkering", "toad", "toast", "toasting",
    "toffee", "toffees", "token", "toll", "tomato", "torch", "tornado", "tortilla",
    "tortoise", "tossing", "totems", "toucan", "tower", "towers", "town", "tractor",
    "trading", "trails", "trampoline", "tramway", "tranquil", "trapeze", "trawler",
    "treasure", "treasurer", "treehouse", "trekking", "trellises", "triangle",
    "tributaries", "tricycle", "trim", "tripod", "triumph", "trivet", "trombone",
    "trooper", "trough", "trouser", "trout", "truce", "truck", "truffle", "trumpet",
    "trumpets", "trust", "trusty", "tubas", "tugboat", "tulip", "tumbler", "tumbling",
    "tuna", "tundra", "tuneful", "tunic", "tuning", "turban", "turbine", "tureen",
    "turning", "turnip", "turret", "turrets", "turtle", "tuxedo", "tweed", "twin",
    "twinkling", "twirling", "typewriter", "ukulele", "umbrella", "umpire", "uncle",
    "undershirt", "understand", "unite", "untruth", "upbeat", "uplift", "upright",
    "uptake", "uranium", "urbane", "usher", "utopia", "vales", "valiant", "valley",
    "valve", "van", "vanilla", "vanity", "vanpool", "vault", "vector", "velocity",
    "velvet", "venture", "verdant", "vernal", "vertex", "verve", "vessels", "vicar",
    "vicarage", "vigor", "villa", "village", "vines", "vineyard", "violet", "violin",
    "violinist", "virtual", "virtue", "visor", "vista", "vivid", "vogue", "volcano",
    "volunteer", "vulture", "wading", "wagon", "wagons", "walnut", "walrus",
    "waltzing", "warbler", "warden", "warehouse", "warm", "wary", "wasp", "watchman",
    "watermelon", "watt", "wavelength", "weasel", "weaver", "welcome", "welder",
    "western", "whale", "wharf", "wheelbarrow", "wheels", "whimsy", "whisk",
    "whisper", "whistles", "whittling", "whole", "wig", "willow", "winch", "winding",
    "windlass", "windmills", "windowsill", "winking", "winsome", "wiry", "wise",
    "wishing", "witty", "wolf", "wombat", "wonders", "woodcock", "workshop",
    "worm", "worthy", "wreath", "wren", "wrestler", "xenon", "yacht", "yodeling",
    "yogurt", "young", "zany", "zeal", "zenith", "zephyr", "zest", "zesty", "zinc",
    "zipper", "zodiac", "zoologist", "zucchini",
)
