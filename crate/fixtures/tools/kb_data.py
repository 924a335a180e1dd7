"""Hand-curated knowledge tables used by build_fixtures.py.

Everything here is desk-scale: a few hundred records per table, written by hand
from general knowledge (ConceptNet / WordNet / Wikidata style facts). Values such
as object sizes and city populations are approximate.
"""

# --------------------------------------------------------------------------
# Taxonomy: tree-id -> list of (concept, parent). Roots have parent "".
# --------------------------------------------------------------------------

ANIMAL_GROUPS = {
    # group: (parent, members with approximate typical length/height in metres)
    "rodent": ("mammal", [("mouse", 0.08), ("rat", 0.2), ("hamster", 0.12), ("squirrel", 0.25),
                          ("beaver", 0.9), ("porcupine", 0.8), ("guinea pig", 0.25), ("chipmunk", 0.15)]),
    "primate": ("mammal", [("monkey", 0.6), ("chimpanzee", 1.2), ("gorilla", 1.7), ("baboon", 0.8),
                           ("lemur", 0.45), ("orangutan", 1.4)]),
    "feline": ("mammal", [("cat", 0.5), ("lion", 2.0), ("tiger", 2.5), ("leopard", 1.6),
                          ("cheetah", 1.3), ("jaguar", 1.7), ("lynx", 1.0), ("cougar", 1.9)]),
    "canine": ("mammal", [("dog", 0.7), ("fox", 0.6), ("wolf", 1.3), ("coyote", 1.0), ("jackal", 0.9)]),
    "livestock": ("mammal", [("cow", 2.4), ("bull", 2.6), ("ox", 2.7), ("pig", 1.5), ("sheep", 1.3),
                             ("goat", 1.2), ("calf", 1.1), ("lamb", 0.7)]),
    "mammal": ("animal", [("rabbit", 0.4), ("hedgehog", 0.2), ("bat", 0.1), ("mole", 0.15),
                          ("raccoon", 0.6), ("skunk", 0.5), ("otter", 1.0), ("badger", 0.75),
                          ("weasel", 0.25), ("ferret", 0.4), ("koala", 0.75), ("kangaroo", 1.5),
                          ("panda", 1.5), ("bear", 2.0), ("hyena", 1.3), ("deer", 1.8), ("moose", 2.8),
                          ("elk", 2.4), ("reindeer", 1.9), ("antelope", 1.5), ("gazelle", 1.1),
                          ("zebra", 2.3), ("horse", 2.2), ("donkey", 1.5), ("mule", 1.8), ("camel", 3.0),
                          ("llama", 1.8), ("giraffe", 5.0), ("elephant", 6.0), ("rhinoceros", 3.5),
                          ("hippopotamus", 4.0), ("buffalo", 3.0), ("bison", 3.2), ("whale", 15.0),
                          ("dolphin", 2.5), ("seal", 1.8), ("walrus", 3.0), ("sloth", 0.6),
                          ("armadillo", 0.7), ("anteater", 1.8)]),
    "bird of prey": ("bird", [("owl", 0.5), ("hawk", 0.55), ("eagle", 0.85), ("vulture", 1.0), ("falcon", 0.45)]),
    "poultry": ("bird", [("chicken", 0.5), ("turkey", 1.0), ("duck", 0.55), ("goose", 0.85)]),
    "songbird": ("bird", [("sparrow", 0.15), ("robin", 0.22), ("canary", 0.12), ("finch", 0.13)]),
    "bird": ("animal", [("hummingbird", 0.08), ("crow", 0.45), ("pigeon", 0.32), ("parrot", 0.4),
                        ("seagull", 0.55), ("swan", 1.4), ("peacock", 1.1), ("flamingo", 1.3),
                        ("penguin", 0.8), ("ostrich", 2.5), ("stork", 1.0), ("heron", 1.0),
                        ("pelican", 1.5), ("woodpecker", 0.25)]),
    "fish": ("animal", [("goldfish", 0.1), ("sardine", 0.2), ("trout", 0.5), ("salmon", 0.8),
                        ("tuna", 1.5), ("cod", 0.9), ("shark", 4.0), ("eel", 1.0), ("catfish", 0.7),
                        ("swordfish", 3.0)]),
    "reptile": ("animal", [("lizard", 0.3), ("gecko", 0.15), ("snake", 1.5), ("python", 4.0),
                           ("crocodile", 4.5), ("alligator", 3.8), ("turtle", 0.4), ("tortoise", 0.8),
                           ("iguana", 1.4), ("chameleon", 0.3)]),
    "amphibian": ("animal", [("frog", 0.08), ("toad", 0.1), ("salamander", 0.15), ("newt", 0.1)]),
    "insect": ("animal", [("ant", 0.005), ("bee", 0.015), ("wasp", 0.02), ("fly", 0.008),
                          ("mosquito", 0.005), ("butterfly", 0.05), ("moth", 0.04), ("beetle", 0.02),
                          ("grasshopper", 0.04), ("cricket", 0.03), ("ladybug", 0.008), ("dragonfly", 0.07)]),
    "arachnid": ("animal", [("spider", 0.02), ("scorpion", 0.08)]),
    "crustacean": ("animal", [("crab", 0.2), ("lobster", 0.5), ("shrimp", 0.07)]),
    "mollusk": ("animal", [("octopus", 1.0), ("snail", 0.03), ("squid", 0.6)]),
}

FOOD_GROUPS = {
    "fruit": ["apple", "banana", "orange", "grape", "strawberry", "cherry", "peach", "pear", "mango",
              "pineapple", "lemon", "watermelon", "plum", "kiwi", "blueberry"],
    "vegetable": ["carrot", "potato", "onion", "tomato", "cucumber", "lettuce", "cabbage", "broccoli",
                  "spinach", "pepper", "garlic", "celery", "pea", "corn", "pumpkin"],
    "cheese": ["ricotta", "cheddar", "brie", "mozzarella", "parmesan", "feta", "gouda", "camembert"],
    "meat": ["beef", "pork", "bacon", "ham", "sausage", "veal", "venison", "mutton"],
    "alcohol": ["beer", "wine", "vodka", "whiskey", "rum", "gin", "tequila", "brandy", "champagne"],
    "bread": ["baguette", "bagel", "croissant", "toast", "pita", "tortilla"],
    "dessert": ["cake", "pie", "cookie", "pudding", "brownie", "cupcake", "donut", "ice cream"],
    "grain": ["rice", "wheat", "oat", "barley", "rye", "quinoa"],
    "nut": ["almond", "walnut", "peanut", "cashew", "pistachio", "hazelnut"],
    "seafood": ["oyster", "clam", "mussel", "scallop", "caviar"],
    "beverage": ["coffee", "tea", "juice", "milk", "soda", "lemonade", "cocoa"],
    "dish": ["pasta", "pizza", "soup", "salad", "sandwich", "burger", "stew", "curry", "omelette", "lasagna"],
}

OBJECT_GROUPS = {
    # group: (parent, members)
    "tool": ("object", ["hammer", "screwdriver", "wrench", "saw", "drill", "shovel", "rake", "axe", "pliers", "key"]),
    "fastener": ("object", ["nail", "screw", "bolt", "button", "zipper"]),
    "furniture": ("object", ["table", "chair", "sofa", "bed", "desk", "cabinet", "shelf", "stool", "wardrobe",
                             "dresser", "bench", "door"]),
    "boat": ("vehicle", ["ferry", "canoe", "kayak", "sailboat", "yacht"]),
    "airplane": ("vehicle", ["floatplane", "jet", "glider", "seaplane"]),
    "vehicle": ("object", ["car", "truck", "bus", "bicycle", "motorcycle", "train", "tractor", "van",
                           "helicopter", "ship"]),
    "instrument": ("object", ["guitar", "piano", "violin", "drum", "flute", "trumpet", "cello", "harp",
                              "saxophone", "clarinet"]),
    "clothing": ("object", ["shirt", "jacket", "coat", "hat", "shoe", "sock", "glove", "scarf", "dress",
                            "skirt", "sweater", "boot"]),
    "container": ("object", ["box", "bag", "basket", "bottle", "jar", "bucket", "barrel", "cup", "bowl", "vase",
                             "drawer", "suitcase"]),
    "utensil": ("object", ["spoon", "fork", "knife", "spatula", "ladle"]),
    "appliance": ("object", ["refrigerator", "oven", "microwave", "toaster", "dishwasher", "blender", "kettle"]),
    "device": ("object", ["phone", "laptop", "computer", "television", "radio", "camera", "tablet"]),
    "building": ("object", ["house", "tower", "stadium", "church", "castle", "school", "hospital", "barn",
                            "skyscraper"]),
    "stationery": ("object", ["pen", "pencil", "eraser", "notebook", "book", "ruler", "stapler"]),
    "weapon": ("object", ["sword", "spear", "gun", "bow", "dagger", "cannon"]),
    "star": ("celestial body", ["sun"]),
    "celestial body": ("object", ["moon", "planet", "comet", "asteroid"]),
    "landform": ("object", ["mountain", "island", "hill", "valley", "volcano"]),
    "settlement": ("object", ["city", "village", "town"]),
    "structure": ("object", ["bridge", "dam", "tunnel", "fence", "wall"]),
    "money": ("object", ["coin", "banknote"]),
}

PLANT_GROUPS = {
    "tree": ["oak", "pine", "maple", "birch", "willow", "palm", "cedar", "elm"],
    "flower": ["rose", "tulip", "daisy", "lily", "orchid", "sunflower", "violet", "lotus"],
    "herb": ["basil", "mint", "parsley", "thyme", "rosemary", "sage"],
    "shrub": ["hedge", "bush", "holly", "lavender"],
    "grass": ["bamboo", "reed", "turf"],
}

PERSON_GROUPS = {
    "professional": ["doctor", "nurse", "teacher", "lawyer", "engineer", "farmer", "soldier", "pilot", "chef",
                     "banker", "judge", "plumber"],
    "artist": ["painter", "singer", "dancer", "actor", "musician", "poet", "sculptor", "writer"],
    "athlete": ["runner", "swimmer", "boxer", "cyclist", "skier", "golfer", "wrestler"],
    "relative": ["mother", "father", "sister", "brother", "uncle", "aunt", "cousin", "grandmother"],
}

# Sizes (metres) of general objects used as the evaluation domain of the size-comparison probe.
OBJECT_SIZES = [
    ("nail", 0.05), ("coin", 0.025), ("button", 0.015), ("key", 0.06), ("pen", 0.14), ("pencil", 0.18),
    ("spoon", 0.15), ("cup", 0.1), ("phone", 0.14), ("book", 0.25), ("shoe", 0.28), ("laptop", 0.35),
    ("guitar", 1.0), ("chair", 0.9), ("table", 1.5), ("door", 2.0), ("bed", 2.1), ("bicycle", 1.7),
    ("piano", 1.6), ("car", 4.5), ("truck", 8.0), ("bus", 12.0), ("boat", 6.0), ("house", 15.0),
    ("airplane", 40.0), ("ship", 200.0), ("tower", 100.0), ("bridge", 500.0), ("stadium", 250.0),
    ("mountain", 3000.0), ("island", 10000.0), ("city", 20000.0), ("moon", 3.4e6), ("planet", 1.2e7),
    ("sun", 1.4e9),
]

# --------------------------------------------------------------------------
# ConceptNet-style properties: concept -> list of (predicate, object).
# --------------------------------------------------------------------------

PROPERTIES = {
    "stop sign": [("atLocation", "street"), ("relatedTo", "octagon"), ("hasProperty", "red"), ("usedFor", "traffic")],
    "street sign": [("atLocation", "street"), ("usedFor", "direction"), ("madeOf", "metal")],
    "traffic light": [("atLocation", "street"), ("usedFor", "traffic"), ("hasProperty", "bright")],
    "car": [("atLocation", "street"), ("usedFor", "transport"), ("hasA", "engine"), ("madeOf", "metal"), ("hasA", "wheel")],
    "bus": [("atLocation", "street"), ("usedFor", "transport"), ("hasA", "engine"), ("hasA", "wheel")],
    "bicycle": [("atLocation", "street"), ("usedFor", "transport"), ("hasA", "wheel"), ("hasA", "pedal")],
    "math": [("relatedTo", "octagon"), ("relatedTo", "number"), ("usedFor", "counting")],
    "geometry": [("relatedTo", "octagon"), ("relatedTo", "triangle"), ("partOf", "math")],
    "pen": [("atLocation", "desk"), ("usedFor", "writing"), ("madeOf", "plastic"), ("atLocation", "hand")],
    "pencil": [("atLocation", "desk"), ("usedFor", "writing"), ("madeOf", "wood"), ("usedFor", "drawing")],
    "chalk": [("usedFor", "writing"), ("atLocation", "classroom"), ("hasProperty", "white")],
    "spoon": [("atLocation", "kitchen"), ("usedFor", "eating"), ("madeOf", "metal"), ("atLocation", "hand")],
    "fork": [("atLocation", "kitchen"), ("usedFor", "eating"), ("madeOf", "metal")],
    "computer": [("atLocation", "desk"), ("usedFor", "work"), ("hasA", "keyboard"), ("hasA", "screen")],
    "laptop": [("atLocation", "desk"), ("usedFor", "work"), ("hasA", "keyboard"), ("hasA", "battery")],
    "phone": [("atLocation", "pocket"), ("usedFor", "communication"), ("hasA", "screen"), ("hasA", "battery")],
    "wallet": [("atLocation", "pocket"), ("usedFor", "money"), ("madeOf", "leather")],
    "key": [("atLocation", "pocket"), ("usedFor", "opening"), ("madeOf", "metal")],
    "coin": [("atLocation", "pocket"), ("usedFor", "money"), ("madeOf", "metal"), ("hasProperty", "round")],
    "knife": [("atLocation", "kitchen"), ("usedFor", "cutting"), ("madeOf", "metal"), ("hasProperty", "sharp")],
    "scissors": [("usedFor", "cutting"), ("atLocation", "drawer"), ("hasProperty", "sharp")],
    "saw": [("usedFor", "cutting"), ("atLocation", "garage"), ("madeOf", "metal")],
    "hammer": [("atLocation", "garage"), ("usedFor", "building"), ("madeOf", "metal"), ("hasA", "handle")],
    "drill": [("atLocation", "garage"), ("usedFor", "building"), ("hasA", "battery")],
    "shovel": [("atLocation", "garage"), ("usedFor", "digging"), ("hasA", "handle")],
    "refrigerator": [("atLocation", "kitchen"), ("usedFor", "cooling"), ("hasA", "door"), ("hasProperty", "cold")],
    "oven": [("atLocation", "kitchen"), ("usedFor", "baking"), ("hasA", "door"), ("hasProperty", "hot")],
    "stove": [("atLocation", "kitchen"), ("usedFor", "cooking"), ("hasProperty", "hot")],
    "microwave": [("atLocation", "kitchen"), ("usedFor", "cooking"), ("hasA", "door")],
    "pot": [("atLocation", "kitchen"), ("usedFor", "cooking"), ("madeOf", "metal")],
    "bed": [("atLocation", "bedroom"), ("usedFor", "sleeping"), ("hasProperty", "soft")],
    "pillow": [("atLocation", "bedroom"), ("usedFor", "sleeping"), ("hasProperty", "soft")],
    "blanket": [("atLocation", "bedroom"), ("usedFor", "warmth"), ("hasProperty", "soft")],
    "sofa": [("atLocation", "living room"), ("usedFor", "sitting"), ("hasProperty", "soft")],
    "chair": [("atLocation", "living room"), ("usedFor", "sitting"), ("madeOf", "wood"), ("hasA", "leg")],
    "bench": [("atLocation", "park"), ("usedFor", "sitting"), ("madeOf", "wood")],
    "table": [("atLocation", "kitchen"), ("madeOf", "wood"), ("hasA", "leg"), ("usedFor", "eating")],
    "desk": [("atLocation", "office"), ("madeOf", "wood"), ("usedFor", "work"), ("hasA", "drawer")],
    "television": [("atLocation", "living room"), ("usedFor", "entertainment"), ("hasA", "screen")],
    "radio": [("atLocation", "car"), ("usedFor", "entertainment"), ("usedFor", "music")],
    "guitar": [("usedFor", "music"), ("madeOf", "wood"), ("hasA", "string"), ("atLocation", "stage")],
    "violin": [("usedFor", "music"), ("madeOf", "wood"), ("hasA", "string"), ("atLocation", "orchestra")],
    "piano": [("usedFor", "music"), ("hasA", "keyboard"), ("atLocation", "living room"), ("madeOf", "wood")],
    "drum": [("usedFor", "music"), ("atLocation", "stage"), ("hasProperty", "loud")],
    "trumpet": [("usedFor", "music"), ("madeOf", "metal"), ("hasProperty", "loud"), ("atLocation", "orchestra")],
    "book": [("atLocation", "library"), ("usedFor", "reading"), ("madeOf", "paper"), ("hasA", "page")],
    "newspaper": [("usedFor", "reading"), ("madeOf", "paper"), ("relatedTo", "news")],
    "magazine": [("usedFor", "reading"), ("madeOf", "paper"), ("atLocation", "store")],
    "notebook": [("usedFor", "writing"), ("madeOf", "paper"), ("hasA", "page")],
    "letter": [("madeOf", "paper"), ("usedFor", "communication"), ("atLocation", "mailbox")],
    "bottle": [("usedFor", "drinking"), ("madeOf", "glass"), ("atLocation", "kitchen")],
    "cup": [("usedFor", "drinking"), ("atLocation", "kitchen"), ("hasA", "handle")],
    "glass": [("usedFor", "drinking"), ("hasProperty", "transparent"), ("atLocation", "kitchen")],
    "window": [("madeOf", "glass"), ("hasProperty", "transparent"), ("partOf", "house")],
    "door": [("partOf", "house"), ("madeOf", "wood"), ("usedFor", "entering"), ("hasA", "handle")],
    "roof": [("partOf", "house"), ("usedFor", "shelter")],
    "wall": [("partOf", "house"), ("madeOf", "brick")],
    "chimney": [("partOf", "house"), ("madeOf", "brick"), ("relatedTo", "smoke")],
    "fireplace": [("atLocation", "living room"), ("relatedTo", "smoke"), ("hasProperty", "hot")],
    "tent": [("usedFor", "shelter"), ("atLocation", "campsite"), ("madeOf", "fabric")],
    "umbrella": [("usedFor", "shelter"), ("relatedTo", "rain"), ("hasA", "handle")],
    "raincoat": [("relatedTo", "rain"), ("usedFor", "warmth"), ("madeOf", "plastic")],
    "coat": [("usedFor", "warmth"), ("madeOf", "wool"), ("atLocation", "closet")],
    "sweater": [("usedFor", "warmth"), ("madeOf", "wool"), ("hasProperty", "soft")],
    "scarf": [("usedFor", "warmth"), ("madeOf", "wool"), ("atLocation", "closet")],
    "shoe": [("atLocation", "closet"), ("madeOf", "leather"), ("usedFor", "walking")],
    "boot": [("atLocation", "closet"), ("madeOf", "leather"), ("usedFor", "walking")],
    "belt": [("madeOf", "leather"), ("atLocation", "closet")],
    "lamp": [("usedFor", "light"), ("atLocation", "desk"), ("hasA", "bulb")],
    "candle": [("usedFor", "light"), ("madeOf", "wax"), ("hasProperty", "hot")],
    "flashlight": [("usedFor", "light"), ("hasA", "battery"), ("atLocation", "drawer")],
    "sun": [("usedFor", "light"), ("hasProperty", "hot"), ("atLocation", "sky"), ("hasProperty", "bright")],
    "moon": [("atLocation", "sky"), ("hasProperty", "round"), ("relatedTo", "night")],
    "star": [("atLocation", "sky"), ("relatedTo", "night"), ("hasProperty", "bright")],
    "cloud": [("atLocation", "sky"), ("relatedTo", "rain"), ("hasProperty", "white")],
    "bird": [("atLocation", "sky"), ("capableOf", "flying"), ("hasA", "wing"), ("hasA", "feather")],
    "airplane": [("atLocation", "sky"), ("capableOf", "flying"), ("usedFor", "transport"), ("hasA", "wing"), ("hasA", "engine")],
    "kite": [("atLocation", "sky"), ("capableOf", "flying"), ("madeOf", "paper")],
    "balloon": [("capableOf", "flying"), ("hasProperty", "round"), ("atLocation", "party")],
    "bee": [("capableOf", "flying"), ("relatedTo", "honey"), ("hasA", "wing"), ("capableOf", "stinging")],
    "wasp": [("capableOf", "flying"), ("capableOf", "stinging"), ("hasA", "wing")],
    "butterfly": [("capableOf", "flying"), ("hasA", "wing"), ("atLocation", "garden")],
    "bat": [("capableOf", "flying"), ("relatedTo", "night"), ("hasA", "wing"), ("atLocation", "cave")],
    "owl": [("capableOf", "flying"), ("relatedTo", "night"), ("hasA", "feather")],
    "chicken": [("atLocation", "farm"), ("hasA", "feather"), ("capableOf", "laying eggs")],
    "duck": [("atLocation", "pond"), ("hasA", "feather"), ("capableOf", "swimming"), ("capableOf", "flying")],
    "cow": [("atLocation", "farm"), ("relatedTo", "milk"), ("desires", "grass")],
    "goat": [("atLocation", "farm"), ("relatedTo", "milk"), ("hasA", "horn")],
    "sheep": [("atLocation", "farm"), ("relatedTo", "wool"), ("desires", "grass")],
    "horse": [("atLocation", "farm"), ("capableOf", "running"), ("desires", "grass"), ("hasA", "mane")],
    "pig": [("atLocation", "farm"), ("relatedTo", "mud"), ("hasA", "tail")],
    "tractor": [("atLocation", "farm"), ("hasA", "engine"), ("hasA", "wheel")],
    "barn": [("atLocation", "farm"), ("madeOf", "wood"), ("usedFor", "shelter")],
    "fish": [("atLocation", "water"), ("capableOf", "swimming"), ("hasA", "fin")],
    "shark": [("atLocation", "ocean"), ("capableOf", "swimming"), ("hasA", "fin"), ("hasA", "tooth")],
    "whale": [("atLocation", "ocean"), ("capableOf", "swimming"), ("hasA", "fin")],
    "dolphin": [("atLocation", "ocean"), ("capableOf", "swimming"), ("hasA", "fin"), ("hasProperty", "smart")],
    "boat": [("atLocation", "water"), ("usedFor", "transport"), ("hasA", "engine")],
    "ship": [("atLocation", "ocean"), ("usedFor", "transport"), ("hasA", "engine")],
    "swimmer": [("atLocation", "water"), ("capableOf", "swimming")],
    "frog": [("atLocation", "pond"), ("capableOf", "swimming"), ("capableOf", "jumping")],
    "kangaroo": [("capableOf", "jumping"), ("hasA", "tail"), ("hasA", "pouch")],
    "rabbit": [("capableOf", "jumping"), ("hasA", "tail"), ("desires", "carrot")],
    "cat": [("hasA", "tail"), ("desires", "milk"), ("capableOf", "climbing"), ("hasA", "whisker")],
    "dog": [("hasA", "tail"), ("capableOf", "running"), ("relatedTo", "bone"), ("capableOf", "barking")],
    "monkey": [("capableOf", "climbing"), ("hasA", "tail"), ("desires", "banana"), ("atLocation", "jungle")],
    "squirrel": [("capableOf", "climbing"), ("hasA", "tail"), ("desires", "nut")],
    "tiger": [("atLocation", "jungle"), ("hasA", "stripe"), ("capableOf", "running"), ("hasA", "tooth")],
    "zebra": [("hasA", "stripe"), ("desires", "grass"), ("capableOf", "running")],
    "lion": [("hasA", "mane"), ("capableOf", "running"), ("hasA", "tooth")],
    "elephant": [("hasA", "trunk"), ("hasProperty", "heavy"), ("hasProperty", "smart")],
    "tree": [("hasA", "trunk"), ("hasA", "leaf"), ("atLocation", "forest"), ("madeOf", "wood")],
    "bush": [("hasA", "leaf"), ("atLocation", "garden")],
    "rose": [("atLocation", "garden"), ("hasProperty", "red"), ("hasA", "thorn")],
    "cactus": [("hasA", "thorn"), ("atLocation", "desert")],
    "camel": [("atLocation", "desert"), ("hasA", "hump"), ("capableOf", "running")],
    "sand": [("atLocation", "desert"), ("atLocation", "beach")],
    "shell": [("atLocation", "beach"), ("hasProperty", "hard")],
    "rock": [("hasProperty", "hard"), ("hasProperty", "heavy"), ("atLocation", "mountain")],
    "diamond": [("hasProperty", "hard"), ("hasProperty", "expensive"), ("relatedTo", "ring")],
    "gold": [("hasProperty", "expensive"), ("relatedTo", "ring"), ("hasProperty", "yellow")],
    "banana": [("hasProperty", "yellow"), ("isA", "fruit"), ("hasProperty", "sweet")],
    "lemon": [("hasProperty", "yellow"), ("isA", "fruit"), ("hasProperty", "sour")],
    "apple": [("isA", "fruit"), ("hasProperty", "red"), ("hasProperty", "sweet")],
    "strawberry": [("isA", "fruit"), ("hasProperty", "red"), ("hasProperty", "sweet")],
    "cherry": [("isA", "fruit"), ("hasProperty", "red")],
    "tomato": [("hasProperty", "red"), ("isA", "vegetable"), ("atLocation", "garden")],
    "carrot": [("isA", "vegetable"), ("hasProperty", "orange"), ("atLocation", "garden")],
    "cake": [("hasProperty", "sweet"), ("atLocation", "party"), ("madeOf", "flour")],
    "bread": [("madeOf", "flour"), ("atLocation", "bakery"), ("usedFor", "eating")],
    "cookie": [("madeOf", "flour"), ("hasProperty", "sweet"), ("atLocation", "bakery")],
    "honey": [("hasProperty", "sweet"), ("relatedTo", "bee"), ("hasProperty", "yellow")],
    "sugar": [("hasProperty", "sweet"), ("hasProperty", "white")],
    "salt": [("hasProperty", "white"), ("atLocation", "kitchen")],
    "snow": [("hasProperty", "white"), ("hasProperty", "cold"), ("relatedTo", "winter")],
    "ice": [("hasProperty", "cold"), ("hasProperty", "hard"), ("relatedTo", "winter")],
    "fire": [("hasProperty", "hot"), ("relatedTo", "smoke"), ("causes", "burn")],
    "milk": [("hasProperty", "white"), ("atLocation", "refrigerator"), ("usedFor", "drinking")],
    "cheese": [("atLocation", "refrigerator"), ("madeOf", "milk")],
    "butter": [("atLocation", "refrigerator"), ("madeOf", "milk"), ("hasProperty", "yellow")],
    "egg": [("atLocation", "refrigerator"), ("relatedTo", "chicken"), ("hasA", "shell")],
    "beer": [("atLocation", "bar"), ("usedFor", "drinking"), ("madeOf", "barley")],
    "wine": [("atLocation", "bar"), ("usedFor", "drinking"), ("madeOf", "grape")],
    "coffee": [("usedFor", "drinking"), ("hasProperty", "hot"), ("atLocation", "cafe")],
    "tea": [("usedFor", "drinking"), ("hasProperty", "hot"), ("atLocation", "cafe")],
    "doctor": [("atLocation", "hospital"), ("capableOf", "healing"), ("usedFor", "medicine")],
    "nurse": [("atLocation", "hospital"), ("capableOf", "healing")],
    "ambulance": [("atLocation", "hospital"), ("usedFor", "transport"), ("hasA", "siren")],
    "fire truck": [("hasA", "siren"), ("hasProperty", "red"), ("hasA", "ladder")],
    "police car": [("hasA", "siren"), ("atLocation", "street")],
    "teacher": [("atLocation", "school"), ("capableOf", "teaching")],
    "student": [("atLocation", "school"), ("capableOf", "learning"), ("desires", "knowledge")],
    "blackboard": [("atLocation", "classroom"), ("usedFor", "writing")],
    "map": [("usedFor", "direction"), ("madeOf", "paper")],
    "compass": [("usedFor", "direction"), ("relatedTo", "north")],
    "clock": [("usedFor", "time"), ("hasA", "hand"), ("atLocation", "wall")],
    "watch": [("usedFor", "time"), ("hasA", "hand"), ("atLocation", "wrist")],
    "calendar": [("usedFor", "time"), ("atLocation", "wall"), ("madeOf", "paper")],
    "painting": [("atLocation", "wall"), ("atLocation", "museum"), ("relatedTo", "art")],
    "statue": [("atLocation", "museum"), ("relatedTo", "art"), ("madeOf", "stone")],
    "castle": [("madeOf", "stone"), ("hasA", "tower"), ("relatedTo", "king")],
    "crown": [("relatedTo", "king"), ("madeOf", "gold")],
    "ring": [("madeOf", "gold"), ("atLocation", "finger"), ("hasProperty", "round")],
    "ball": [("hasProperty", "round"), ("usedFor", "playing"), ("atLocation", "park")],
    "toy": [("usedFor", "playing"), ("atLocation", "bedroom")],
    "swing": [("usedFor", "playing"), ("atLocation", "park")],
    "tennis racket": [("usedFor", "playing"), ("hasA", "string"), ("hasA", "handle")],
    "bow": [("hasA", "string"), ("usedFor", "hunting")],
    "spear": [("usedFor", "hunting"), ("hasProperty", "sharp")],
    "sword": [("hasProperty", "sharp"), ("madeOf", "metal"), ("relatedTo", "king")],
    "needle": [("hasProperty", "sharp"), ("usedFor", "sewing")],
    "thread": [("usedFor", "sewing"), ("madeOf", "fabric")],
    "soap": [("usedFor", "cleaning"), ("atLocation", "bathroom")],
    "towel": [("atLocation", "bathroom"), ("hasProperty", "soft"), ("usedFor", "drying")],
    "toothbrush": [("atLocation", "bathroom"), ("usedFor", "cleaning"), ("madeOf", "plastic")],
    "broom": [("usedFor", "cleaning"), ("hasA", "handle"), ("atLocation", "closet")],
    "vacuum": [("usedFor", "cleaning"), ("atLocation", "closet"), ("hasProperty", "loud")],
    "mirror": [("atLocation", "bathroom"), ("madeOf", "glass")],
    "sink": [("atLocation", "bathroom"), ("atLocation", "kitchen"), ("relatedTo", "water")],
    "river": [("relatedTo", "water"), ("hasA", "bank"), ("atLocation", "valley")],
    "lake": [("relatedTo", "water"), ("atLocation", "mountain")],
    "rain": [("relatedTo", "water"), ("causes", "wet"), ("relatedTo", "cloud")],
    "umbrella stand": [("atLocation", "hallway"), ("relatedTo", "rain")],
    "alarm": [("hasProperty", "loud"), ("causes", "waking"), ("usedFor", "time")],
    "rooster": [("atLocation", "farm"), ("hasProperty", "loud"), ("causes", "waking")],
    "coffee maker": [("atLocation", "kitchen"), ("usedFor", "coffee")],
    "exercise": [("causes", "sweat"), ("hasSubevent", "breathing"), ("causesDesire", "drink")],
    "running": [("causes", "sweat"), ("hasPrerequisite", "shoe"), ("causesDesire", "drink")],
    "eating": [("hasPrerequisite", "food"), ("causes", "fullness"), ("hasSubevent", "chewing")],
    "cooking": [("hasPrerequisite", "food"), ("atLocation", "kitchen"), ("hasPrerequisite", "stove")],
    "reading": [("hasPrerequisite", "book"), ("causes", "learning")],
    "studying": [("causes", "learning"), ("atLocation", "library"), ("hasPrerequisite", "book")],
    "sleeping": [("atLocation", "bedroom"), ("hasSubevent", "dreaming"), ("hasPrerequisite", "bed")],
    "dreaming": [("relatedTo", "night"), ("partOf", "sleeping")],
    "swimming": [("atLocation", "water"), ("causes", "wet"), ("hasPrerequisite", "water")],
    "shower": [("atLocation", "bathroom"), ("causes", "wet")],
    "driving": [("hasPrerequisite", "car"), ("atLocation", "street"), ("hasPrerequisite", "license")],
    "flying": [("hasPrerequisite", "wing"), ("atLocation", "sky")],
    "writing": [("hasPrerequisite", "pen"), ("causes", "letter")],
    "shopping": [("hasPrerequisite", "money"), ("atLocation", "store")],
    "traveling": [("hasPrerequisite", "money"), ("hasPrerequisite", "ticket"), ("causes", "tiredness")],
    "working": [("causes", "tiredness"), ("causes", "money"), ("atLocation", "office")],
    "party": [("hasSubevent", "dancing"), ("causesDesire", "drink"), ("hasProperty", "loud")],
    "concert": [("hasSubevent", "music"), ("hasProperty", "loud"), ("hasPrerequisite", "ticket")],
    "movie": [("atLocation", "cinema"), ("hasPrerequisite", "ticket"), ("usedFor", "entertainment")],
    "game": [("usedFor", "entertainment"), ("usedFor", "playing")],
    "hunger": [("causesDesire", "eating"), ("causes", "eating")],
    "thirst": [("causesDesire", "drink"), ("causes", "drinking")],
    "cold weather": [("causesDesire", "warmth"), ("relatedTo", "winter")],
    "baby": [("desires", "milk"), ("capableOf", "crying"), ("desires", "sleep")],
    "child": [("desires", "toy"), ("capableOf", "learning"), ("capableOf", "playing")],
    "person": [("desires", "money"), ("capableOf", "learning"), ("desires", "sleep")],
    "worker": [("desires", "money"), ("atLocation", "office"), ("capableOf", "working")],
    "plant": [("desires", "water"), ("desires", "sunlight"), ("atLocation", "garden")],
    "flower": [("atLocation", "garden"), ("desires", "sunlight"), ("hasProperty", "pretty")],
    "grass": [("atLocation", "park"), ("hasProperty", "green"), ("desires", "sunlight")],
    "leaf": [("hasProperty", "green"), ("partOf", "tree")],
    "frog prince": [("relatedTo", "king"), ("atLocation", "pond")],
    "paper": [("madeOf", "wood"), ("receivesAction", "folded"), ("usedFor", "writing")],
    "shirt": [("madeOf", "fabric"), ("receivesAction", "folded"), ("atLocation", "closet")],
    "envelope": [("madeOf", "paper"), ("receivesAction", "folded"), ("atLocation", "mailbox")],
    "wood": [("receivesAction", "burned"), ("partOf", "tree")],
    "coal": [("receivesAction", "burned"), ("hasProperty", "black")],
    "candle wax": [("receivesAction", "melted")],
    "chocolate": [("receivesAction", "melted"), ("hasProperty", "sweet"), ("hasProperty", "brown")],
    "ice cream": [("receivesAction", "melted"), ("hasProperty", "cold"), ("hasProperty", "sweet")],
    "mountain": [("hasProperty", "tall"), ("hasA", "peak")],
    "skyscraper": [("hasProperty", "tall"), ("atLocation", "city"), ("madeOf", "steel")],
    "giraffe": [("hasProperty", "tall"), ("hasA", "neck"), ("desires", "leaf")],
    "bridge": [("madeOf", "steel"), ("atLocation", "river")],
    "train": [("madeOf", "steel"), ("usedFor", "transport"), ("atLocation", "station")],
    "ticket": [("atLocation", "station"), ("madeOf", "paper")],
    "wheel": [("partOf", "car"), ("hasProperty", "round")],
    "engine": [("partOf", "car"), ("hasProperty", "hot")],
    "steering wheel": [("partOf", "car"), ("hasProperty", "round")],
    "keyboard": [("partOf", "computer"), ("hasA", "key")],
    "screen": [("partOf", "computer"), ("hasProperty", "bright")],
    "finger": [("partOf", "hand"), ("hasA", "nail")],
    "hand": [("partOf", "body"), ("hasA", "finger")],
    "heart": [("partOf", "body"), ("usedFor", "pumping")],
    "brain": [("partOf", "body"), ("usedFor", "thinking")],
    "eye": [("partOf", "body"), ("usedFor", "seeing")],
    "ear": [("partOf", "body"), ("usedFor", "hearing")],
    "nose": [("partOf", "body"), ("usedFor", "smelling")],
    "tongue": [("partOf", "body"), ("usedFor", "tasting")],
    "glasses": [("usedFor", "seeing"), ("madeOf", "glass")],
    "telescope": [("usedFor", "seeing"), ("relatedTo", "star")],
    "microscope": [("usedFor", "seeing"), ("atLocation", "laboratory")],
}

SYNONYMS = [
    ("fast", "quick"), ("big", "large"), ("small", "little"), ("happy", "glad"), ("sad", "unhappy"),
    ("smart", "clever"), ("rich", "wealthy"), ("hard", "difficult"), ("easy", "simple"), ("angry", "mad"),
    ("cold", "chilly"), ("quiet", "silent"), ("loud", "noisy"), ("pretty", "beautiful"), ("ugly", "hideous"),
    ("brave", "courageous"), ("scared", "afraid"), ("tired", "sleepy"), ("sick", "ill"), ("huge", "enormous"),
    ("tiny", "minuscule"), ("wet", "damp"), ("dry", "arid"), ("calm", "peaceful"), ("strange", "odd"),
    ("funny", "amusing"), ("correct", "right"), ("wrong", "incorrect"), ("old", "ancient"), ("new", "modern"),
    ("kind", "nice"), ("mean", "cruel"), ("strong", "powerful"), ("weak", "feeble"), ("cheap", "inexpensive"),
    ("expensive", "costly"), ("clean", "spotless"), ("dirty", "filthy"), ("hot", "scorching"), ("warm", "toasty"),
    ("bright", "shiny"), ("dark", "dim"), ("thin", "slim"), ("fat", "plump"), ("tall", "lofty"),
    ("short", "brief"), ("wide", "broad"), ("narrow", "slender"), ("full", "packed"), ("empty", "vacant"),
    ("honest", "truthful"), ("famous", "renowned"), ("busy", "occupied"), ("lazy", "idle"), ("polite", "courteous"),
    ("rude", "impolite"), ("wise", "sensible"), ("foolish", "silly"), ("gentle", "tender"), ("rough", "coarse"),
    ("smooth", "sleek"), ("sharp", "keen"), ("dull", "boring"), ("exciting", "thrilling"), ("scary", "frightening"),
    ("safe", "secure"), ("dangerous", "risky"), ("fresh", "new"), ("stale", "old"), ("sweet", "sugary"),
    ("bitter", "acrid"), ("simple", "plain"), ("complex", "complicated"), ("certain", "sure"), ("vague", "unclear"),
    ("joyful", "cheerful"), ("gloomy", "dreary"), ("eager", "keen"), ("nervous", "anxious"), ("relaxed", "calm"),
    ("real", "genuine"), ("fake", "false"), ("whole", "entire"), ("tough", "sturdy"), ("fragile", "delicate"),
    ("hungry", "starving"), ("thirsty", "parched"), ("awful", "terrible"), ("great", "excellent"), ("good", "fine"),
    ("bad", "poor"), ("quick", "rapid"), ("slow", "sluggish"), ("little", "small"), ("large", "massive"),
    ("lucky", "fortunate"), ("clever", "bright"), ("weird", "bizarre"), ("neat", "tidy"), ("messy", "untidy"),
    ("loyal", "faithful"), ("humble", "modest"), ("proud", "arrogant"), ("cozy", "snug"), ("grumpy", "cranky"),
    ("shy", "timid"), ("bold", "daring"), ("wealthy", "affluent"), ("poor", "needy"), ("ill", "unwell"),
    ("glad", "pleased"), ("sorry", "regretful"), ("huge", "gigantic"), ("sad", "miserable"), ("angry", "furious"),
    ("beautiful", "gorgeous"), ("happy", "joyous"), ("tired", "exhausted"), ("cold", "freezing"), ("hot", "boiling"),
]

ANTONYMS = [
    ("hot", "cold"), ("fast", "slow"), ("big", "small"), ("tall", "short"), ("happy", "sad"), ("rich", "poor"),
    ("young", "old"), ("strong", "weak"), ("light", "dark"), ("heavy", "light"), ("loud", "quiet"), ("hard", "soft"),
    ("early", "late"), ("clean", "dirty"), ("wet", "dry"), ("full", "empty"), ("thick", "thin"), ("wide", "narrow"),
    ("deep", "shallow"), ("cheap", "expensive"), ("easy", "difficult"), ("safe", "dangerous"), ("brave", "cowardly"),
    ("kind", "cruel"), ("polite", "rude"), ("friendly", "hostile"), ("smooth", "rough"), ("sharp", "dull"),
    ("sweet", "bitter"), ("tight", "loose"), ("high", "low"), ("long", "short"), ("near", "far"), ("open", "closed"),
    ("true", "false"), ("good", "bad"), ("right", "wrong"), ("alive", "dead"), ("awake", "asleep"),
    ("clever", "stupid"), ("generous", "selfish"), ("healthy", "sick"), ("beautiful", "ugly"), ("noisy", "silent"),
    ("fat", "thin"), ("warm", "cool"), ("modern", "ancient"), ("public", "private"), ("simple", "complex"),
    ("strict", "lenient"), ("sober", "drunk"), ("famous", "unknown"), ("guilty", "innocent"), ("wise", "foolish"),
    ("tired", "energetic"), ("busy", "idle"), ("fresh", "stale"), ("raw", "cooked"), ("active", "passive"),
    ("major", "minor"), ("solid", "liquid"), ("positive", "negative"), ("inner", "outer"), ("upper", "lower"),
    ("junior", "senior"), ("maximum", "minimum"), ("optimistic", "pessimistic"), ("calm", "anxious"),
    ("visible", "invisible"), ("possible", "impossible"), ("happy", "miserable"), ("honest", "dishonest"),
    ("patient", "impatient"), ("legal", "illegal"), ("formal", "informal"), ("fair", "unfair"),
    ("certain", "uncertain"), ("comfortable", "uncomfortable"), ("lucky", "unlucky"), ("common", "rare"),
    ("normal", "strange"), ("bright", "dim"), ("huge", "tiny"), ("large", "little"), ("gentle", "harsh"),
    ("shy", "bold"), ("proud", "ashamed"), ("calm", "nervous"), ("empty", "crowded"), ("humble", "arrogant"),
    ("lazy", "hardworking"), ("cheerful", "gloomy"), ("neat", "messy"), ("wild", "tame"), ("sane", "insane"),
    ("free", "captive"), ("smart", "dumb"), ("fake", "real"), ("correct", "incorrect"), ("relaxed", "tense"),
    ("dense", "sparse"), ("fertile", "barren"), ("ancient", "new"), ("brief", "lengthy"), ("even", "odd"),
    ("native", "foreign"), ("pure", "impure"), ("rigid", "flexible"), ("sour", "sweet"), ("frozen", "melted"),
    ("hungry", "full"), ("sick", "well"), ("quick", "slow"), ("boiling", "freezing"), ("joyful", "sorrowful"),
    ("mean", "nice"), ("wealthy", "needy"), ("bold", "timid"), ("vague", "clear"), ("messy", "tidy"),
    ("grumpy", "cheerful"), ("fragile", "sturdy"), ("rough", "gentle"), ("good", "evil"), ("first", "last"),
]

# --------------------------------------------------------------------------
# Encyclopedic facts.
# --------------------------------------------------------------------------

# country -> [(city, population)]
CITIES = {
    "united states": [("new york", 8300000), ("los angeles", 3900000), ("chicago", 2700000), ("houston", 2300000),
                      ("phoenix", 1600000), ("philadelphia", 1580000), ("dallas", 1300000), ("austin", 960000),
                      ("san francisco", 870000), ("seattle", 740000), ("boston", 680000), ("nashville", 690000),
                      ("detroit", 640000), ("memphis", 630000), ("louisville", 620000), ("baltimore", 580000),
                      ("milwaukee", 570000), ("atlanta", 500000), ("miami", 440000), ("minneapolis", 420000), ("new orleans", 380000), ("cincinnati", 310000),
                      ("tampa", 400000), ("honolulu", 350000), ("scottsdale", 240000), ("concord", 125000),
                      ("round rock", 120000), ("dearborn", 109000), ("burbank", 105000), ("beaverton", 97000),
                      ("reading", 95000), ("hawthorne", 88000), ("duluth", 86000), ("mountain view", 82000),
                      ("redmond", 73000), ("gary", 70000), ("palo alto", 67000), ("brookline", 63000),
                      ("cupertino", 60000), ("hoboken", 58000), ("bentonville", 54000), ("oak park", 52000),
                      ("tupelo", 38000), ("los gatos", 33000), ("menlo park", 33000), ("princeton", 30000),
                      ("chanhassen", 26000), ("aberdeen", 17000)],
    "united kingdom": [("london", 8900000), ("birmingham", 1140000), ("leeds", 790000), ("glasgow", 630000),
                       ("sheffield", 580000), ("manchester", 550000), ("edinburgh", 520000), ("liverpool", 500000),
                       ("bristol", 470000), ("coventry", 370000), ("cardiff", 360000), ("belfast", 340000),
                       ("nottingham", 320000), ("portsmouth", 210000), ("oxford", 150000), ("cambridge", 145000),
                       ("bath", 94000), ("halifax", 88000), ("shrewsbury", 72000), ("dartford", 56000),
                       ("winchester", 45000), ("stratford", 28000), ("wilmslow", 24000), ("yate", 21000)],
    "germany": [("berlin", 3600000), ("hamburg", 1800000), ("munich", 1500000), ("cologne", 1080000),
                ("frankfurt", 750000), ("stuttgart", 630000), ("dusseldorf", 620000), ("leipzig", 590000),
                ("dortmund", 590000), ("hanover", 530000), ("nuremberg", 520000), ("bonn", 330000),
                ("wurzburg", 127000), ("gottingen", 118000), ("ulm", 126000), ("wolfsburg", 124000), ("trier", 110000),
                ("hurth", 59000), ("eisenach", 42000), ("leimen", 27000), ("herzogenaurach", 23000)],
    "france": [("paris", 2100000), ("marseille", 870000), ("lyon", 520000), ("toulouse", 490000), ("nice", 340000),
               ("nantes", 310000), ("strasbourg", 280000), ("bordeaux", 260000), ("lille", 230000),
               ("amiens", 135000), ("besancon", 115000), ("rouen", 110000), ("ajaccio", 70000), ("neuilly", 60000),
               ("grasse", 50000), ("saumur", 27000), ("mougins", 19000), ("amboise", 13000)],
    "italy": [("rome", 2800000), ("milan", 1400000), ("naples", 960000), ("turin", 870000), ("palermo", 650000),
              ("genoa", 580000), ("bologna", 390000), ("florence", 380000), ("venice", 260000), ("verona", 260000),
              ("modena", 185000), ("ravenna", 155000), ("rimini", 150000), ("pisa", 90000), ("sanremo", 54000),
              ("maranello", 17000), ("urbino", 15000), ("vinci", 14000)],
    "japan": [("tokyo", 13900000), ("yokohama", 3700000), ("osaka", 2700000), ("nagoya", 2300000),
              ("sapporo", 1970000), ("fukuoka", 1600000), ("kobe", 1520000), ("kyoto", 1460000),
              ("hiroshima", 1200000), ("toyota city", 420000), ("kadoma", 120000)],
    "china": [("shanghai", 24000000), ("beijing", 21500000), ("chengdu", 16000000), ("guangzhou", 15000000),
              ("shenzhen", 12500000), ("wuhan", 11000000), ("hangzhou", 10000000), ("shenyang", 8000000),
              ("shaoshan", 100000)],
    "austria": [("vienna", 1900000), ("graz", 290000), ("linz", 200000), ("salzburg", 150000), ("thal", 2000),
                ("fuschl", 1500)],
    "spain": [("madrid", 3200000), ("barcelona", 1600000), ("valencia", 790000), ("seville", 690000),
              ("malaga", 570000), ("figueres", 47000), ("manacor", 45000)],
    "sweden": [("stockholm", 975000), ("gothenburg", 580000), ("malmo", 340000), ("uppsala", 170000),
               ("jonkoping", 140000)],
    "netherlands": [("amsterdam", 870000), ("rotterdam", 650000), ("leiden", 125000), ("delft", 100000),
                    ("zundert", 22000)],
    "south korea": [("seoul", 9700000), ("busan", 3400000), ("incheon", 2900000), ("daegu", 2400000),
                    ("suwon", 1200000)],
    "ireland": [("dublin", 550000), ("cork", 210000), ("galway", 80000)],
    "australia": [("sydney", 5300000), ("melbourne", 5000000), ("brisbane", 2500000), ("perth", 2100000),
                  ("adelaide", 1300000)],
    "canada": [("toronto", 2700000), ("montreal", 1700000), ("calgary", 1300000), ("ottawa", 1000000),
               ("vancouver", 630000), ("newmarket", 87000), ("charlemagne", 6000)],
    "switzerland": [("zurich", 420000), ("geneva", 200000), ("basel", 175000)],
    "czech republic": [("prague", 1300000), ("brno", 380000)],
    "poland": [("warsaw", 1790000), ("krakow", 780000)],
    "portugal": [("lisbon", 545000), ("porto", 230000), ("funchal", 105000)],
}

# (person, birth city, birth year, death city or None)
PEOPLE = [
    ("elvis presley", "tupelo", 1935, "memphis"), ("john lennon", "liverpool", 1940, "new york"),
    ("paul mccartney", "liverpool", 1942, None), ("george harrison", "liverpool", 1943, "los angeles"),
    ("ringo starr", "liverpool", 1940, None), ("mick jagger", "dartford", 1943, None),
    ("david bowie", "london", 1947, "new york"), ("albert einstein", "ulm", 1879, "princeton"),
    ("wolfgang amadeus mozart", "salzburg", 1756, "vienna"), ("ludwig van beethoven", "bonn", 1770, "vienna"),
    ("johann sebastian bach", "eisenach", 1685, "leipzig"), ("richard wagner", "leipzig", 1813, "venice"),
    ("pablo picasso", "malaga", 1881, "mougins"), ("salvador dali", "figueres", 1904, "figueres"),
    ("vincent van gogh", "zundert", 1853, None), ("rembrandt", "leiden", 1606, "amsterdam"),
    ("anne frank", "frankfurt", 1929, None), ("karl marx", "trier", 1818, "london"),
    ("napoleon bonaparte", "ajaccio", 1769, None), ("victor hugo", "besancon", 1802, "paris"),
    ("claude monet", "paris", 1840, None), ("marie curie", "warsaw", 1867, None),
    ("leonardo da vinci", "vinci", 1452, "amboise"), ("galileo galilei", "pisa", 1564, None),
    ("dante alighieri", "florence", 1265, "ravenna"), ("luciano pavarotti", "modena", 1935, "modena"),
    ("enzo ferrari", "modena", 1898, "maranello"), ("giuseppe verdi", None, 1813, "milan"),
    ("charles dickens", "portsmouth", 1812, None), ("william shakespeare", "stratford", 1564, "stratford"),
    ("jane austen", None, 1775, "winchester"), ("charles darwin", "shrewsbury", 1809, None),
    ("alan turing", "london", 1912, "wilmslow"), ("j k rowling", "yate", 1965, None),
    ("adele", "london", 1988, None), ("ed sheeran", "halifax", 1991, None),
    ("tom hanks", "concord", 1956, None), ("marilyn monroe", "los angeles", 1926, "los angeles"),
    ("walt disney", "chicago", 1901, "burbank"), ("michael jackson", "gary", 1958, "los angeles"),
    ("prince", "minneapolis", 1958, "chanhassen"), ("bob dylan", "duluth", 1941, None),
    ("jimi hendrix", "seattle", 1942, "london"), ("kurt cobain", "aberdeen", 1967, "seattle"),
    ("steve jobs", "san francisco", 1955, "palo alto"), ("bill gates", "seattle", 1955, None),
    ("barack obama", "honolulu", 1961, None), ("martin luther king", "atlanta", 1929, "memphis"),
    ("john f kennedy", "brookline", 1917, "dallas"), ("ernest hemingway", "oak park", 1899, None),
    ("louis armstrong", "new orleans", 1901, "new york"), ("frank sinatra", "hoboken", 1915, "los angeles"),
    ("muhammad ali", "louisville", 1942, "scottsdale"), ("beyonce", "houston", 1981, None),
    ("taylor swift", "reading", 1989, None), ("akira kurosawa", "tokyo", 1910, "tokyo"),
    ("hayao miyazaki", "tokyo", 1941, None), ("haruki murakami", "kyoto", 1949, None),
    ("yoko ono", "tokyo", 1933, None), ("mao zedong", "shaoshan", 1893, "beijing"),
    ("jack ma", "hangzhou", 1964, None), ("yao ming", "shanghai", 1980, None),
    ("lang lang", "shenyang", 1982, None), ("gustav klimt", None, 1862, "vienna"),
    ("sigmund freud", None, 1856, "london"), ("arnold schwarzenegger", "thal", 1947, None),
    ("greta garbo", "stockholm", 1905, "new york"), ("alfred nobel", "stockholm", 1833, "sanremo"),
    ("zlatan ibrahimovic", "malmo", 1981, None), ("agnetha faltskog", "jonkoping", 1950, None),
    ("ingmar bergman", "uppsala", 1918, None), ("james joyce", "dublin", 1882, "zurich"),
    ("oscar wilde", "dublin", 1854, "paris"), ("bono", "dublin", 1960, None),
    ("samuel beckett", "dublin", 1906, "paris"), ("antonio banderas", "malaga", 1960, None),
    ("penelope cruz", "madrid", 1974, None), ("rafael nadal", "manacor", 1986, None),
    ("cristiano ronaldo", "funchal", 1985, None), ("nicole kidman", "honolulu", 1967, None),
    ("hugh jackman", "sydney", 1968, None), ("cate blanchett", "melbourne", 1969, None),
    ("celine dion", "charlemagne", 1968, None), ("ryan reynolds", "vancouver", 1976, None),
    ("jim carrey", "newmarket", 1962, None), ("leonard cohen", "montreal", 1934, "los angeles"),
    ("drake", "toronto", 1986, None), ("bong joon ho", "daegu", 1969, None),
    ("karl lagerfeld", "hamburg", 1933, "neuilly"), ("dirk nowitzki", "wurzburg", 1978, None),
    ("michael schumacher", "hurth", 1969, None), ("angela merkel", "hamburg", 1954, None),
    ("boris becker", "leimen", 1967, None), ("franz kafka", "prague", 1883, None),
    ("edith piaf", "paris", 1915, "grasse"), ("zinedine zidane", "marseille", 1972, None),
    ("coco chanel", "saumur", 1883, "paris"), ("jules verne", "nantes", 1828, "amiens"),
    ("sophia loren", "rome", 1934, None), ("federico fellini", "rimini", 1920, "rome"),
    ("valentino rossi", "urbino", 1979, None), ("lionel messi", None, 1987, None),
    ("pope francis", None, 1936, "rome"), ("freddie mercury", None, 1946, "london"),
    ("john keats", "london", 1795, "rome"), ("percy shelley", None, 1792, None),
    ("george orwell", None, 1903, "london"), ("virginia woolf", "london", 1882, None),
    ("amy winehouse", "london", 1983, "london"), ("john bonham", None, 1948, None),
    ("kylie minogue", "melbourne", 1968, None), ("nick cave", None, 1957, None),
    ("bjorn borg", "stockholm", 1956, None), ("max planck", None, 1858, "gottingen"),
    ("ferdinand porsche", None, 1875, "stuttgart"), ("gottlieb daimler", None, 1834, "stuttgart"),
]

# (band, formed year, [members])
BANDS = [
    ("the beatles", 1960, ["john lennon", "paul mccartney", "george harrison", "ringo starr"]),
    ("the rolling stones", 1962, ["mick jagger", "keith richards", "charlie watts", "ronnie wood"]),
    ("led zeppelin", 1968, ["jimmy page", "robert plant", "john bonham", "john paul jones"]),
    ("queen", 1970, ["freddie mercury", "brian may", "roger taylor", "john deacon"]),
    ("pink floyd", 1965, ["syd barrett", "roger waters", "david gilmour", "nick mason"]),
    ("u2", 1976, ["bono", "the edge", "adam clayton", "larry mullen"]),
    ("nirvana", 1987, ["kurt cobain", "krist novoselic", "dave grohl"]),
    ("radiohead", 1985, ["thom yorke", "jonny greenwood", "ed o'brien", "philip selway"]),
    ("metallica", 1981, ["james hetfield", "lars ulrich", "kirk hammett"]),
    ("the who", 1964, ["roger daltrey", "pete townshend", "keith moon", "john entwistle"]),
    ("the doors", 1965, ["jim morrison", "ray manzarek", "robby krieger", "john densmore"]),
    ("coldplay", 1996, ["chris martin", "jonny buckland", "guy berryman", "will champion"]),
    ("oasis", 1991, ["liam gallagher", "noel gallagher", "paul arthurs"]),
    ("blur", 1988, ["damon albarn", "graham coxon", "alex james", "dave rowntree"]),
    ("red hot chili peppers", 1983, ["anthony kiedis", "flea", "chad smith", "john frusciante"]),
    ("pearl jam", 1990, ["eddie vedder", "stone gossard", "jeff ament", "mike mccready"]),
    ("ac dc", 1973, ["angus young", "malcolm young", "bon scott", "brian johnson"]),
    ("aerosmith", 1970, ["steven tyler", "joe perry", "tom hamilton", "joey kramer"]),
    ("the clash", 1976, ["joe strummer", "mick jones", "paul simonon", "topper headon"]),
    ("sex pistols", 1975, ["johnny rotten", "sid vicious", "steve jones", "paul cook"]),
    ("talking heads", 1975, ["david byrne", "tina weymouth", "chris frantz", "jerry harrison"]),
    ("rem", 1980, ["michael stipe", "peter buck", "mike mills", "bill berry"]),
    ("the smiths", 1982, ["morrissey", "johnny marr", "andy rourke", "mike joyce"]),
    ("joy division", 1976, ["ian curtis", "bernard sumner", "peter hook", "stephen morris"]),
    ("depeche mode", 1980, ["dave gahan", "martin gore", "andy fletcher"]),
    ("genesis", 1967, ["peter gabriel", "phil collins", "tony banks", "mike rutherford"]),
    ("black sabbath", 1968, ["ozzy osbourne", "tony iommi", "geezer butler", "bill ward"]),
    ("deep purple", 1968, ["ian gillan", "ritchie blackmore", "jon lord", "roger glover"]),
    ("fleetwood mac", 1967, ["stevie nicks", "lindsey buckingham", "mick fleetwood", "john mcvie"]),
    ("the police", 1977, ["sting", "andy summers", "stewart copeland"]),
    ("dire straits", 1977, ["mark knopfler", "john illsley", "david knopfler"]),
    ("guns n' roses", 1985, ["axl rose", "slash", "duff mckagan", "izzy stradlin"]),
    ("bon jovi", 1983, ["jon bon jovi", "richie sambora", "tico torres", "david bryan"]),
    ("eagles", 1971, ["glenn frey", "don henley", "joe walsh", "randy meisner"]),
    ("the beach boys", 1961, ["brian wilson", "mike love", "carl wilson", "al jardine"]),
    ("green day", 1987, ["billie joe armstrong", "mike dirnt", "tre cool"]),
    ("the strokes", 1998, ["julian casablancas", "albert hammond", "nick valensi"]),
    ("arctic monkeys", 2002, ["alex turner", "matt helders", "jamie cook"]),
    ("muse", 1994, ["matthew bellamy", "chris wolstenholme", "dominic howard"]),
    ("blondie", 1974, ["debbie harry", "chris stein", "clem burke"]),
    ("the cure", 1978, ["robert smith", "simon gallup", "lol tolhurst"]),
    ("kiss", 1973, ["gene simmons", "paul stanley", "ace frehley", "peter criss"]),
    ("van halen", 1972, ["eddie van halen", "david lee roth", "alex van halen", "michael anthony"]),
    ("iron maiden", 1975, ["steve harris", "bruce dickinson", "dave murray"]),
    ("kraftwerk", 1970, ["ralf hutter", "florian schneider"]),
    ("linkin park", 1996, ["chester bennington", "mike shinoda", "brad delson"]),
    ("the velvet underground", 1964, ["lou reed", "john cale", "sterling morrison", "moe tucker"]),
    ("abba", 1972, ["agnetha faltskog", "bjorn ulvaeus", "benny andersson", "anni-frid lyngstad"]),
    ("the ramones", 1974, ["joey ramone", "johnny ramone", "dee dee ramone", "tommy ramone"]),
    ("kool and the gang", 1964, ["robert bell", "ronald bell", "junior cony"]),
]

# (film, lead actor, spouse)
FILMS = [
    ("forrest gump", "tom hanks", "rita wilson"), ("cast away", "tom hanks", "rita wilson"),
    ("big", "tom hanks", "rita wilson"), ("fight club", "brad pitt", "angelina jolie"),
    ("men in black", "will smith", "jada pinkett smith"), ("hancock", "will smith", "jada pinkett smith"),
    ("cool hand luke", "paul newman", "joanne woodward"), ("casablanca", "humphrey bogart", "lauren bacall"),
    ("the maltese falcon", "humphrey bogart", "lauren bacall"), ("deadpool", "ryan reynolds", "blake lively"),
    ("logan", "hugh jackman", "deborra-lee furness"), ("footloose", "kevin bacon", "kyra sedgwick"),
    ("ferris bueller's day off", "matthew broderick", "sarah jessica parker"), ("skyfall", "daniel craig", "rachel weisz"),
    ("casino royale", "daniel craig", "rachel weisz"), ("a quiet place", "john krasinski", "emily blunt"),
    ("thor", "chris hemsworth", "elsa pataky"), ("no country for old men", "javier bardem", "penelope cruz"),
    ("desperado", "antonio banderas", "melanie griffith"), ("bonnie and clyde", "warren beatty", "annette bening"),
    ("the deer hunter", "christopher walken", "georgianne walken"), ("the matrix", "keanu reeves", "jennifer syme"),
    ("gladiator", "russell crowe", "danielle spencer"), ("braveheart", "mel gibson", "robyn moore"),
    ("rocky", "sylvester stallone", "jennifer flavin"), ("the terminator", "arnold schwarzenegger", "maria shriver"),
    ("taxi driver", "robert de niro", "grace hightower"), ("the godfather", "marlon brando", "movita castaneda"),
    ("moulin rouge", "ewan mcgregor", "mary elizabeth winstead"), ("the notebook", "ryan gosling", "eva mendes"),
    ("la la land", "ryan gosling", "eva mendes"), ("the dark knight", "christian bale", "sibi blazic"),
    ("batman begins", "christian bale", "sibi blazic"),
    ("pulp fiction", "john travolta", "kelly preston"), ("grease", "john travolta", "kelly preston"),
    ("top gun", "tom cruise", "katie holmes"), ("the graduate", "dustin hoffman", "lisa hoffman"),
    ("jaws", "roy scheider", "brenda seimer"), ("dirty dancing", "patrick swayze", "lisa niemi"),
    ("ghost", "patrick swayze", "lisa niemi"), ("the shining", "jack nicholson", "sandra knight"),
    ("back to the future", "michael j fox", "tracy pollan"), ("star wars", "harrison ford", "calista flockhart"),
    ("indiana jones", "harrison ford", "calista flockhart"), ("the big lebowski", "jeff bridges", "susan geston"),
]

# (founder, company, hq city)
COMPANIES = [
    ("bill gates", "microsoft", "redmond"), ("steve jobs", "apple", "cupertino"), ("jeff bezos", "amazon", "seattle"),
    ("larry page", "google", "mountain view"), ("mark zuckerberg", "facebook", "menlo park"),
    ("elon musk", "spacex", "hawthorne"), ("reed hastings", "netflix", "los gatos"), ("phil knight", "nike", "beaverton"),
    ("michael dell", "dell", "round rock"), ("larry ellison", "oracle", "austin"), ("jack dorsey", "twitter", "san francisco"),
    ("brian chesky", "airbnb", "san francisco"), ("walt disney", "disney", "burbank"), ("sam walton", "walmart", "bentonville"),
    ("henry ford", "ford", "dearborn"), ("ferdinand porsche", "porsche", "stuttgart"), ("gottlieb daimler", "daimler", "stuttgart"),
    ("soichiro honda", "honda", "tokyo"), ("akio morita", "sony", "tokyo"), ("konosuke matsushita", "panasonic", "kadoma"),
    ("lee byung-chul", "samsung", "suwon"), ("jack ma", "alibaba", "hangzhou"), ("pony ma", "tencent", "shenzhen"),
    ("ren zhengfei", "huawei", "shenzhen"), ("adolf dassler", "adidas", "herzogenaurach"),
    ("rudolf dassler", "puma", "herzogenaurach"), ("enzo ferrari", "ferrari", "maranello"), ("guccio gucci", "gucci", "florence"),
    ("coco chanel", "chanel", "paris"), ("richard branson", "virgin", "london"), ("dietrich mateschitz", "red bull", "fuschl"),
    ("ingvar kamprad", "ikea", "delft"), ("william boeing", "boeing", "chicago"), ("ray kroc", "mcdonald's", "chicago"),
    ("william procter", "procter and gamble", "cincinnati"), ("john pemberton", "coca-cola", "atlanta"),
    ("howard hughes", "hughes aircraft", "los angeles"), ("carl benz", "benz", "stuttgart"),
    ("werner von siemens", "siemens", "munich"), ("robert bosch", "bosch", "stuttgart"),
    ("ferruccio lamborghini", "lamborghini", "bologna"), ("giovanni agnelli", "fiat", "turin"),
    ("louis renault", "renault", "paris"), ("andre citroen", "citroen", "paris"), ("armand peugeot", "peugeot", "paris"),
    ("sakichi toyoda", "toyota", "toyota city"),
]

# Sentences for the multi-choice language-modelling sanity probe: (sentence, gold, distractor, distractor).
MC_LM = [
    ("the film was released in the us and [MASK] well at the box office .", "performed", "recurring", "always"),
    ("she opened the door and [MASK] into the room .", "walked", "purple", "seldom"),
    ("the children were playing in the [MASK] after school .", "park", "quickly", "eleven"),
    ("he drank a glass of [MASK] before going to bed .", "water", "seven", "under"),
    ("the capital of france is [MASK] .", "paris", "running", "green"),
    ("the sun rises in the [MASK] every morning .", "east", "happily", "chair"),
    ("she wrote a [MASK] to her grandmother .", "letter", "often", "blue"),
    ("the cat sat on the [MASK] and slept .", "mat", "forty", "sing"),
    ("we need to buy some [MASK] for dinner tonight .", "food", "seldom", "happily"),
    ("the teacher asked the students to open their [MASK] .", "books", "loudly", "eighty"),
    ("it was raining so i took my [MASK] .", "umbrella", "tomorrow", "swim"),
    ("the band played music all [MASK] long .", "night", "ceiling", "slowly"),
    ("he was born in [MASK] and grew up in london .", "1980", "pencil", "smile"),
    ("the dog started to [MASK] at the mailman .", "bark", "table", "between"),
    ("she is the [MASK] of the company .", "president", "quickly", "twelve"),
    ("the meeting will start at nine [MASK] .", "o'clock", "banana", "jump"),
    ("my brother plays the [MASK] in a band .", "guitar", "yesterday", "wet"),
    ("they went to the beach to [MASK] in the ocean .", "swim", "carpet", "under"),
    ("the museum is open from monday to [MASK] .", "friday", "elephant", "slowly"),
    ("he scored a goal in the last [MASK] of the game .", "minute", "purple", "cook"),
    ("the river flows into the [MASK] .", "sea", "fork", "happily"),
    ("the war ended in [MASK] after six years .", "1945", "spoon", "dance"),
    ("the book was translated into many [MASK] .", "languages", "windows", "ran"),
    ("she bought a new pair of [MASK] for the party .", "shoes", "clouds", "often"),
    ("the plane landed safely at the [MASK] .", "airport", "pillow", "sang"),
    ("the doctor told him to take the [MASK] twice a day .", "medicine", "mountain", "loud"),
    ("he turned off the [MASK] and went to sleep .", "light", "horse", "quickly"),
    ("the team won the [MASK] last year .", "championship", "sandwich", "below"),
    ("the train was delayed because of the [MASK] .", "snow", "guitar", "always"),
    ("they got married in a small [MASK] .", "church", "pencil", "swimming"),
    ("the population of the city has [MASK] rapidly .", "grown", "blue", "table"),
    ("the song reached number one on the [MASK] .", "charts", "shoes", "jumped"),
    ("the company was founded in [MASK] by two brothers .", "1998", "kitchen", "sleepy"),
    ("she studied medicine at the [MASK] of oxford .", "university", "banana", "running"),
    ("the soldiers fought bravely in the [MASK] .", "battle", "cupcake", "softly"),
    ("the restaurant serves italian [MASK] .", "food", "rivers", "forty"),
    ("he lost his [MASK] and could not open the door .", "key", "song", "happily"),
    ("the baby was [MASK] because she was hungry .", "crying", "wooden", "seven"),
    ("the president gave a [MASK] on television .", "speech", "carrot", "under"),
    ("the ship sank in the atlantic [MASK] .", "ocean", "pencil", "dancing"),
    ("the album was recorded in [MASK] studios .", "abbey", "quickly", "spoon"),
    ("the church was built in the twelfth [MASK] .", "century", "guitar", "green"),
    ("he works as a [MASK] in a hospital .", "nurse", "window", "ninety"),
    ("the students passed the [MASK] with high marks .", "exam", "river", "loudly"),
    ("the bridge crosses the [MASK] near the town .", "river", "piano", "often"),
    ("the actor won an [MASK] for his performance .", "award", "ladder", "eaten"),
    ("she cut the cake with a [MASK] .", "knife", "cloud", "sleepy"),
    ("the farmer grows wheat and [MASK] on his land .", "corn", "radio", "jumped"),
    ("the movie tells the [MASK] of a young boy .", "story", "spoon", "quickly"),
    ("the village is located in the [MASK] of the valley .", "middle", "banana", "sang"),
    ("he was elected [MASK] of the city in 2010 .", "mayor", "pillow", "blue"),
    ("the birds flew south for the [MASK] .", "winter", "chair", "eleven"),
    ("the car stopped at the red [MASK] .", "light", "cheese", "happily"),
    ("the novel was first [MASK] in 1851 .", "published", "wooden", "river"),
    ("she plays tennis every [MASK] .", "weekend", "carrot", "loud"),
    ("the police arrested the [MASK] last night .", "suspect", "table", "greenly"),
    ("the company employs more than a thousand [MASK] .", "people", "clouds", "swam"),
    ("the bread is baked fresh every [MASK] .", "morning", "guitar", "under"),
    ("he broke his [MASK] playing football .", "leg", "song", "seldom"),
    ("the library has a large collection of [MASK] .", "books", "oceans", "jumped"),
    ("the temperature dropped below [MASK] last night .", "zero", "window", "sang"),
    ("the king ruled the country for forty [MASK] .", "years", "spoons", "happily"),
    ("she sent me an [MASK] with the details .", "email", "elephant", "slowly"),
    ("the city is famous for its beautiful [MASK] .", "architecture", "sneezing", "forty"),
    ("the match ended in a [MASK] .", "draw", "pillow", "quickly"),
    ("the river was too deep to [MASK] .", "cross", "table", "purple"),
    ("he poured milk into his [MASK] .", "coffee", "shoes", "eleven"),
    ("the students sat quietly in the [MASK] .", "classroom", "cloud", "jumped"),
    ("the museum displays paintings by famous [MASK] .", "artists", "carrots", "slowly"),
    ("the road was closed because of an [MASK] .", "accident", "orange", "sang"),
    ("the garden is full of beautiful [MASK] .", "flowers", "engines", "often"),
    ("the singer released her first [MASK] in 2005 .", "album", "fork", "greenly"),
    ("we watched the [MASK] set over the sea .", "sun", "chair", "forty"),
    ("the soup was too hot to [MASK] .", "eat", "window", "purple"),
    ("he keeps his money in the [MASK] .", "bank", "song", "jumped"),
    ("the game was cancelled due to heavy [MASK] .", "rain", "pencil", "happily"),
    ("the player was sent off after a [MASK] .", "foul", "cupcake", "slowly"),
    ("the professor teaches history at the [MASK] .", "university", "banana", "sang"),
    ("the town was destroyed by an [MASK] in 1906 .", "earthquake", "umbrella", "sleepy"),
    ("she wore a long black [MASK] to the wedding .", "dress", "river", "quickly"),
    ("the kids built a [MASK] in the snow .", "snowman", "tuesday", "loudly"),
    ("the orchestra performed a [MASK] by mozart .", "symphony", "sandwich", "under"),
    ("the mountain is covered with [MASK] all year .", "snow", "guitar", "happily"),
    ("he read the [MASK] every morning with breakfast .", "newspaper", "elephant", "jumped"),
    ("the shop sells fresh fruit and [MASK] .", "vegetables", "engines", "often"),
    ("the pilot flew the [MASK] through the storm .", "plane", "carrot", "sang"),
    ("the army invaded the country in [MASK] .", "1939", "pillow", "slowly"),
    ("the painting was sold for a million [MASK] .", "dollars", "rivers", "greenly"),
    ("the baby took her first [MASK] yesterday .", "steps", "clouds", "forty"),
    ("the fire was put out by the [MASK] .", "firefighters", "bananas", "quickly"),
    ("he brushed his [MASK] before bed .", "teeth", "window", "loud"),
    ("the lake freezes every [MASK] .", "winter", "spoon", "jumped"),
    ("the bus was full of [MASK] going to work .", "passengers", "carrots", "happily"),
    ("she fed the [MASK] in the pond .", "ducks", "pianos", "slowly"),
    ("the store closes at ten [MASK] night .", "at", "guitar", "purple"),
    ("the athlete broke the world [MASK] .", "record", "pillow", "sang"),
    ("the tree lost all its [MASK] in autumn .", "leaves", "engines", "often"),
    ("the scientist published a paper in a [MASK] .", "journal", "banana", "quickly"),
    ("they climbed to the top of the [MASK] .", "mountain", "sandwich", "loudly"),
    ("the phone rang in the middle of the [MASK] .", "night", "carrot", "forty"),
    ("he ordered a pizza with extra [MASK] .", "cheese", "windows", "jumped"),
    ("the election will be held next [MASK] .", "year", "spoon", "happily"),
    ("the museum was founded in the nineteenth [MASK] .", "century", "pillow", "sang"),
    ("she painted the walls of her room [MASK] .", "blue", "elephant", "seldom"),
    ("the horse jumped over the [MASK] .", "fence", "tuesday", "quickly"),
    ("the movie was directed by a famous [MASK] .", "director", "carrot", "loudly"),
    ("he carried the boxes up the [MASK] .", "stairs", "clouds", "forty"),
    ("the ship arrived at the [MASK] in the morning .", "port", "guitar", "jumped"),
    ("the team plays its home games at the [MASK] .", "stadium", "banana", "happily"),
    ("the river runs through the center of the [MASK] .", "city", "pencil", "sang"),
    ("the flowers need water and [MASK] to grow .", "sunlight", "engines", "slowly"),
    ("the old man walked with a [MASK] .", "cane", "cloud", "purple"),
    ("they ate dinner at a nice [MASK] .", "restaurant", "tuesday", "quickly"),
    ("the children went to bed after brushing their [MASK] .", "teeth", "rivers", "loud"),
    ("the concert was sold out within [MASK] .", "hours", "carrots", "jumped"),
    ("the castle was built on top of a [MASK] .", "hill", "spoon", "happily"),
    ("the clock struck [MASK] at midnight .", "twelve", "banana", "sang"),
    ("the snake shed its [MASK] .", "skin", "guitar", "often"),
    ("the company reported record [MASK] this year .", "profits", "pillows", "slowly"),
    ("he fixed the car in his [MASK] .", "garage", "cloud", "purple"),
    ("she planted tomatoes in her [MASK] .", "garden", "tuesday", "quickly"),
    ("the moon orbits the [MASK] .", "earth", "carrot", "loudly"),
    ("the letter arrived in the [MASK] this morning .", "mail", "elephant", "forty"),
    ("the students wore uniforms to [MASK] .", "school", "banana", "jumped"),
    ("the city council approved the new [MASK] .", "budget", "cupcake", "happily"),
    ("he wiped the sweat from his [MASK] .", "forehead", "window", "sang"),
    ("the storm knocked down many [MASK] .", "trees", "spoons", "slowly"),
    ("she listened to the radio while [MASK] dinner .", "cooking", "purple", "table"),
    ("the hikers got lost in the [MASK] .", "forest", "guitar", "quickly"),
    ("the cake was decorated with [MASK] .", "candles", "engines", "loudly"),
    ("the criminal was sentenced to ten years in [MASK] .", "prison", "banana", "forty"),
    ("the girl read a [MASK] before going to sleep .", "book", "cloud", "jumped"),
    ("the farmer milked the [MASK] every morning .", "cows", "pianos", "happily"),
    ("the plane took off from the [MASK] .", "runway", "carrot", "sang"),
    ("the water boils at one hundred [MASK] .", "degrees", "elephants", "slowly"),
    ("he paid for the groceries with his credit [MASK] .", "card", "river", "purple"),
    ("the sailors raised the [MASK] of the ship .", "sails", "carrots", "quickly"),
]
