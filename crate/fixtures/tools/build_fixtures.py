#!/usr/bin/env python3
"""Regenerate the fixture files in ../ from kb_data.py.

Output is deterministic: rerunning produces byte-identical files.

    python3 fixtures/tools/build_fixtures.py
"""

import hashlib
import math
import os
import random
import re
from collections import Counter, defaultdict

from kb_data import (ANIMAL_GROUPS, ANTONYMS, BANDS, CITIES, COMPANIES, FILMS, FOOD_GROUPS, MC_LM,
                     OBJECT_GROUPS, OBJECT_SIZES, PEOPLE, PERSON_GROUPS, PLANT_GROUPS, PROPERTIES, SYNONYMS)

OUT = os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
D_E = 50
SEED = 20200101


def write_tsv(name, rows):
    with open(os.path.join(OUT, name), "w", encoding="utf-8", newline="\n") as f:
        for row in rows:
            f.write("\t".join(str(c) for c in row) + "\n")


def stable_rng(label):
    h = hashlib.sha256(label.encode("utf-8")).digest()
    return random.Random(int.from_bytes(h[:8], "little"))


# --------------------------------------------------------------------------
# taxonomy.tsv / numeric.tsv
# --------------------------------------------------------------------------

def build_taxonomy():
    rows = []
    seen = {}

    def add(concept, parent, tree):
        key = (concept, parent)
        if concept in seen and seen[concept] != tree:
            raise SystemExit(f"concept {concept!r} appears in trees {seen[concept]} and {tree}")
        seen[concept] = tree
        rows.append((concept, parent, tree))

    for root in ["animal", "food", "object", "plant", "person"]:
        add(root, "", root)
    for group, (parent, members) in ANIMAL_GROUPS.items():
        if group != "mammal" and group != "bird" and group not in ("fish", "reptile", "amphibian", "insect",
                                                                  "arachnid", "crustacean", "mollusk"):
            add(group, parent, "animal")
    for group in ["mammal", "bird", "fish", "reptile", "amphibian", "insect", "arachnid", "crustacean", "mollusk"]:
        add(group, "animal", "animal")
    for group, (parent, members) in ANIMAL_GROUPS.items():
        for name, _ in members:
            add(name, group, "animal")
    for group, members in FOOD_GROUPS.items():
        add(group, "food", "food")
        for m in members:
            add(m, group, "food")
    groups_added = set()
    for group, (parent, members) in OBJECT_GROUPS.items():
        if group not in groups_added and group != "object":
            add(group, parent, "object")
            groups_added.add(group)
    for group, (parent, members) in OBJECT_GROUPS.items():
        for m in members:
            if m in groups_added:
                continue
            add(m, group, "object")
    for group, members in PLANT_GROUPS.items():
        add(group, "plant", "plant")
        for m in members:
            add(m, group, "plant")
    for group, members in PERSON_GROUPS.items():
        add(group, "person", "person")
        for m in members:
            add(m, group, "person")
    rows = sorted(set(rows))
    return rows


ANIMALS_WITHOUT_SIZE = {"guinea pig", "chipmunk", "orangutan", "cougar", "jackal", "calf", "lamb", "ox", "mule",
                        "elk", "reindeer", "gazelle", "antelope", "walrus", "anteater", "heron", "stork", "newt",
                        "catfish"}


def size_bucket(v):
    return int(math.floor(2.0 * math.log10(v))) + 10


def build_numeric():
    rows = []
    animals = [(n, s) for _, (_, members) in ANIMAL_GROUPS.items() for n, s in members
               if n not in ANIMALS_WITHOUT_SIZE]
    assert len(animals) == 127, len(animals)
    assert len(OBJECT_SIZES) == 35, len(OBJECT_SIZES)
    for name, size in animals + OBJECT_SIZES:
        rows.append((name, "size", f"{size:g}", size_bucket(size)))
    return sorted(rows)


# --------------------------------------------------------------------------
# triples.tsv
# --------------------------------------------------------------------------

def build_triples():
    rows = set()
    for subj, props in PROPERTIES.items():
        for pred, obj in props:
            if subj != obj:
                rows.add((subj, pred, obj))
    syn = set()
    for a, b in SYNONYMS:
        if a != b:
            syn.add(tuple(sorted((a, b))))
    ant = set()
    for a, b in ANTONYMS:
        if a != b:
            ant.add(tuple(sorted((a, b))))
    both = syn & ant
    assert not both, both
    for a, b in sorted(syn):
        rows.add((a, "synonym", b))
    for a, b in sorted(ant):
        rows.add((a, "antonym", b))
    return sorted(rows), len(syn), len(ant)


# --------------------------------------------------------------------------
# encyc.tsv / cities.tsv
# --------------------------------------------------------------------------

def build_encyc():
    city_index = {}
    for country, cities in CITIES.items():
        for city, pop in cities:
            assert city not in city_index, city
            city_index[city] = (country, pop)
    rows = []

    def city_row(entity, relation, city, bridge=""):
        country, pop = city_index[city]
        rows.append((entity, relation, city, "city", country, pop, bridge))

    for band, year, members in BANDS:
        for m in members:
            rows.append((m, "band-formed-year", year, "year", "", "", band))
    for film, actor, spouse in FILMS:
        rows.append((film, "actor-spouse", spouse, "person", "", "", actor))
    for founder, company, city in COMPANIES:
        city_row(founder, "company-hq-city", city, company)
    for person, born, year, died in PEOPLE:
        if born:
            city_row(person, "birth-place", born)
        rows.append((person, "birth-date", year, "year", "", "", ""))
        if died:
            city_row(person, "death-place", died)
    keys = Counter((r[0], r[1]) for r in rows)
    dup = [k for k, c in keys.items() if c > 1]
    assert not dup, dup
    cities = sorted((c, country, pop) for c, (country, pop) in city_index.items())
    return sorted(rows, key=lambda r: (r[1], r[0])), cities


# --------------------------------------------------------------------------
# Always-Never: templates and curated labels
# --------------------------------------------------------------------------

LABELS = ["never", "rarely", "sometimes", "often", "always"]

AN_TEMPLATES = [
    # id, template, paper-published (1) or fixture-defined (0)
    ("an-dish", "A dish with SUBJ [MASK] contains OBJ .", 1),
    ("an-placed", "SUBJ is [MASK] placed in the OBJ .", 1),
    ("an-has-a", "A SUBJ [MASK] has a OBJ .", 1),
    ("an-smaller", "A SUBJ is [MASK] smaller than a OBJ .", 1),
    ("an-diet", "OBJ is [MASK] part of a SUBJ 's diet .", 1),
    ("an-larger", "A SUBJ is [MASK] larger than a OBJ .", 1),
    ("an-has", "A SUBJ [MASK] has OBJ .", 1),
    ("an-drinks", "A SUBJ [MASK] drinks OBJ .", 0),
    ("an-lives", "A SUBJ [MASK] lives in the OBJ .", 0),
]


def animal_table():
    out = {}
    for group, (parent, members) in ANIMAL_GROUPS.items():
        cls = group
        if parent in ("mammal", "bird"):
            cls = parent
        for name, size in members:
            out[name] = (cls, size)
    return out


def dish_labels():
    s_cat = {"pasta": "base", "rice": "base", "potato": "base", "noodles": "base", "beans": "base",
             "beef": "meat", "pork": "meat", "chicken": "meat", "lamb": "meat",
             "chocolate": "sweet", "strawberry": "sweet", "apple": "sweet", "banana": "sweet",
             "lettuce": "veg", "mushroom": "veg", "spinach": "veg", "broccoli": "veg",
             "cheese": "dairy", "yogurt": "dairy", "egg": "egg", "tofu": "veg"}
    o_cat = {"salt": "salt", "garlic": "aromatic", "onion": "aromatic", "pepper": "aromatic",
             "sugar": "sweetener", "honey": "sweetener", "vanilla": "sweetener", "cinnamon": "sweetener",
             "cheese": "dairy", "butter": "dairy", "cream": "dairy", "milk": "dairy",
             "beef": "meat", "pork": "meat", "bacon": "meat", "chocolate": "chocolate", "lemon": "citrus",
             "flour": "flour", "egg": "egg", "tomato": "tomato"}
    m = {
        "base": dict(salt="always", aromatic="often", sweetener="rarely", dairy="sometimes", meat="sometimes",
                     chocolate="never", citrus="sometimes", flour="sometimes", egg="sometimes", tomato="often"),
        "meat": dict(salt="always", aromatic="often", sweetener="sometimes", dairy="sometimes", meat="sometimes",
                     chocolate="never", citrus="sometimes", flour="sometimes", egg="rarely", tomato="sometimes"),
        "sweet": dict(salt="rarely", aromatic="never", sweetener="often", dairy="often", meat="never",
                      chocolate="sometimes", citrus="sometimes", flour="sometimes", egg="sometimes", tomato="never"),
        "veg": dict(salt="often", aromatic="sometimes", sweetener="rarely", dairy="sometimes", meat="sometimes",
                    chocolate="never", citrus="sometimes", flour="rarely", egg="sometimes", tomato="sometimes"),
        "dairy": dict(salt="sometimes", aromatic="sometimes", sweetener="sometimes", dairy="sometimes",
                      meat="sometimes", chocolate="rarely", citrus="rarely", flour="sometimes", egg="sometimes",
                      tomato="sometimes"),
        "egg": dict(salt="often", aromatic="sometimes", sweetener="sometimes", dairy="sometimes", meat="sometimes",
                    chocolate="rarely", citrus="rarely", flour="sometimes", egg="sometimes", tomato="sometimes"),
    }
    out = []
    for s, sc in s_cat.items():
        for o, oc in o_cat.items():
            if s != o:
                out.append(("an-dish", s, o, m[sc][oc]))
    return out


def placed_labels():
    containers = {"drawer": (0.5, {"utensil", "stationery", "sock"}), "box": (0.6, None), "bag": (0.5, None),
                  "refrigerator": (0.8, {"food"}), "oven": (0.5, {"baked"}), "wallet": (0.12, {"money"}),
                  "pocket": (0.14, {"money", "key", "phone"}), "closet": (1.5, {"clothing", "sock"}),
                  "garage": (6.0, {"vehicle", "tool"}), "sink": (0.5, {"utensil", "dish"}),
                  "envelope": (0.25, {"paper"}), "jar": (0.15, {"small food"}), "vase": (0.3, {"flower"}),
                  "suitcase": (0.8, {"clothing", "sock"}), "dishwasher": (0.6, {"utensil", "dish"})}
    always_pairs = {("letter", "envelope"), ("milk", "refrigerator"), ("car", "garage"), ("rose", "vase")}
    items = {"spoon": (0.15, "utensil"), "fork": (0.18, "utensil"), "knife": (0.2, "utensil"),
             "plate": (0.25, "dish"), "cup": (0.1, "dish"), "bowl": (0.15, "dish"), "pen": (0.14, "stationery"),
             "pencil": (0.18, "stationery"), "letter": (0.2, "paper"), "coin": (0.025, "money"),
             "banknote": (0.15, "money"), "key": (0.06, "key"), "phone": (0.14, "phone"), "shirt": (0.3, "clothing"),
             "sock": (0.2, "sock"), "shoe": (0.28, "clothing"), "jacket": (0.5, "clothing"), "milk": (0.25, "food"),
             "cheese": (0.1, "food small food"), "butter": (0.1, "food"), "bread": (0.3, "baked"),
             "pizza": (0.35, "baked"), "cake": (0.3, "baked"), "flower": (0.4, "flower"), "rose": (0.4, "flower"),
             "car": (4.5, "vehicle"), "bicycle": (1.7, "vehicle"), "hammer": (0.3, "tool"), "drill": (0.3, "tool"),
             "book": (0.25, "stationery"), "laptop": (0.35, "device"), "sugar": (0.05, "small food"),
             "candy": (0.03, "small food"), "honey": (0.1, "small food"), "photo": (0.15, "paper")}
    out = []
    for s, (size, kind) in items.items():
        for o, (cap, purpose) in containers.items():
            kinds = set(kind.split(" ")) if kind != "small food" else {"small food"}
            if kind == "food small food":
                kinds = {"food", "small food"}
            if size > cap:
                label = "never"
            elif (s, o) in always_pairs:
                label = "always"
            elif purpose is None:
                label = "sometimes"
            elif kinds & purpose:
                label = "often"
            else:
                label = "rarely"
            out.append(("an-placed", s, o, label))
    return out


HAS_A_PARTS = ["wing", "tail", "beak", "horn", "mane", "trunk", "shell", "fin", "hump", "pouch", "tusk", "stinger",
               "antler", "tongue", "heart"]

HAS_A_DEFAULTS = {
    "mammal": dict(tail="often", tongue="always", heart="always"),
    "rodent": dict(tail="always", tongue="always", heart="always"),
    "primate": dict(tail="sometimes", tongue="always", heart="always"),
    "feline": dict(tail="always", tongue="always", heart="always"),
    "canine": dict(tail="always", tongue="always", heart="always"),
    "livestock": dict(tail="always", tongue="always", heart="always", horn="sometimes"),
    "bird": dict(wing="always", beak="always", tail="often", tongue="often", heart="always"),
    "fish": dict(fin="always", tail="always", heart="always", tongue="rarely"),
    "reptile": dict(tail="always", tongue="always", heart="always"),
    "amphibian": dict(tongue="always", heart="always", tail="rarely"),
    "insect": dict(wing="often", heart="sometimes"),
    "arachnid": dict(heart="sometimes"),
    "crustacean": dict(shell="always", heart="often", tail="sometimes"),
    "mollusk": dict(heart="always"),
}

HAS_A_OVERRIDES = {
    "bat": dict(wing="always"), "elephant": dict(trunk="always", tusk="often", tail="always"),
    "rhinoceros": dict(horn="always"), "cow": dict(horn="often"), "bull": dict(horn="always"),
    "goat": dict(horn="often"), "sheep": dict(horn="sometimes"), "deer": dict(antler="sometimes"),
    "moose": dict(antler="sometimes"), "reindeer": dict(antler="often"), "elk": dict(antler="sometimes"),
    "lion": dict(mane="sometimes"), "horse": dict(mane="always", tail="always"), "zebra": dict(mane="always"),
    "donkey": dict(mane="always"), "camel": dict(hump="always"), "kangaroo": dict(pouch="sometimes", tail="always"),
    "koala": dict(pouch="sometimes", tail="rarely"), "walrus": dict(tusk="always", fin="often"),
    "turtle": dict(shell="always"), "tortoise": dict(shell="always"), "snail": dict(shell="always"),
    "bee": dict(stinger="often"), "wasp": dict(stinger="always"), "scorpion": dict(stinger="always", tail="always"),
    "penguin": dict(wing="always"), "ostrich": dict(wing="always"), "shark": dict(fin="always"),
    "dolphin": dict(fin="always", tail="always"), "whale": dict(fin="always", tail="always"),
    "seal": dict(fin="sometimes"), "gorilla": dict(tail="never"), "chimpanzee": dict(tail="never"),
    "orangutan": dict(tail="never"), "monkey": dict(tail="often"), "baboon": dict(tail="always"),
    "lemur": dict(tail="always"), "bear": dict(tail="often"), "pig": dict(tail="always"),
    "frog": dict(tail="never"), "toad": dict(tail="never"), "salamander": dict(tail="always"),
    "newt": dict(tail="always"), "snake": dict(tail="sometimes"), "python": dict(tail="sometimes"),
    "octopus": dict(heart="always"), "hippopotamus": dict(tusk="sometimes"), "warthog": dict(tusk="always"),
    "ant": dict(wing="rarely", stinger="sometimes"), "fly": dict(wing="always"), "mosquito": dict(wing="always"),
    "butterfly": dict(wing="always"), "moth": dict(wing="always"), "dragonfly": dict(wing="always"),
    "ladybug": dict(wing="always"), "grasshopper": dict(wing="always"), "cricket": dict(wing="always"),
    "beetle": dict(wing="often", shell="sometimes"), "armadillo": dict(shell="always"),
    "hedgehog": dict(tail="sometimes"), "sloth": dict(tail="rarely"), "platypus": dict(beak="always"),
    "lobster": dict(tail="always"), "shrimp": dict(tail="always"), "crab": dict(tail="never"),
}

HAS_PLURAL = {
    # plural/mass objects for "A SUBJ [MASK] has OBJ ."
    "horns": {"rhinoceros": "always", "bull": "always", "cow": "often", "goat": "often", "sheep": "sometimes",
              "buffalo": "always", "bison": "always", "antelope": "always", "gazelle": "always", "ox": "often",
              "giraffe": "always"},
    "fur": {"mammal": "always", "rodent": "always", "primate": "always", "feline": "always", "canine": "always",
            "livestock": "often", "elephant": "rarely", "rhinoceros": "never", "hippopotamus": "never",
            "whale": "never", "dolphin": "never", "armadillo": "rarely", "walrus": "rarely", "pig": "sometimes",
            "seal": "often", "bee": "sometimes"},
    "feathers": {"bird": "always"},
    "scales": {"fish": "always", "reptile": "always", "turtle": "sometimes", "tortoise": "sometimes",
               "butterfly": "often", "moth": "often", "eel": "rarely", "shark": "often", "armadillo": "sometimes",
               "pangolin": "always"},
    "whiskers": {"feline": "always", "rodent": "always", "canine": "always", "seal": "always", "walrus": "always",
                 "otter": "always", "rabbit": "always", "catfish": "always", "mammal": "sometimes"},
    "stripes": {"zebra": "always", "tiger": "always", "skunk": "always", "raccoon": "often", "bee": "always",
                "wasp": "always", "cat": "sometimes", "lemur": "often", "snake": "sometimes", "badger": "always",
                "chipmunk": "always"},
    "spots": {"leopard": "always", "cheetah": "always", "jaguar": "always", "giraffe": "always",
              "ladybug": "always", "hyena": "often", "dog": "sometimes", "cow": "sometimes", "deer": "sometimes",
              "trout": "often", "salamander": "sometimes", "lynx": "often", "gecko": "sometimes",
              "horse": "sometimes", "pig": "rarely"},
    "gills": {"fish": "always", "shark": "always", "crab": "always", "lobster": "always", "shrimp": "always",
              "octopus": "always", "squid": "always", "salamander": "sometimes", "newt": "rarely",
              "frog": "rarely", "toad": "rarely"},
    "legs": {"mammal": "always", "rodent": "always", "primate": "always", "feline": "always", "canine": "always",
             "livestock": "always", "bird": "always", "insect": "always", "arachnid": "always",
             "crustacean": "always", "amphibian": "always", "reptile": "often", "snake": "never", "python": "never",
             "fish": "never", "whale": "never", "dolphin": "never", "seal": "rarely", "eel": "never",
             "octopus": "never", "squid": "never", "snail": "never", "mollusk": "never"},
    "teeth": {"mammal": "always", "rodent": "always", "primate": "always", "feline": "always", "canine": "always",
              "livestock": "always", "bird": "never", "reptile": "often", "turtle": "never", "tortoise": "never",
              "fish": "often", "shark": "always", "amphibian": "sometimes", "toad": "never", "insect": "never",
              "anteater": "never", "whale": "sometimes", "platypus": "rarely"},
}

DIET_CLASS = {
    "carnivore": ["lion", "tiger", "leopard", "cheetah", "jaguar", "lynx", "wolf", "coyote", "hyena", "shark", "eagle",
                  "hawk", "owl", "falcon", "crocodile", "alligator", "snake", "python", "seal", "dolphin", "cougar",
                  "otter", "weasel", "ferret", "vulture", "tuna", "swordfish", "octopus", "squid", "pelican",
                  "penguin", "heron", "stork", "walrus", "jackal"],
    "herbivore": ["cow", "horse", "sheep", "goat", "deer", "rabbit", "elephant", "giraffe", "zebra", "hippopotamus",
                  "rhinoceros", "camel", "kangaroo", "koala", "panda", "moose", "bison", "buffalo", "tortoise",
                  "iguana", "llama", "donkey", "elk", "reindeer", "antelope", "gazelle", "beaver", "sloth", "bull",
                  "ox", "mule", "snail", "guinea pig", "goose"],
    "omnivore": ["bear", "pig", "rat", "raccoon", "crow", "chicken", "monkey", "chimpanzee", "fox", "dog", "skunk",
                 "mouse", "badger", "baboon", "turtle", "duck", "seagull", "goldfish", "catfish", "crab", "lobster",
                 "ant", "cockroach", "gorilla", "lemur", "orangutan", "cat", "turkey"],
    "insectivore": ["frog", "toad", "bat", "anteater", "armadillo", "lizard", "gecko", "chameleon", "woodpecker",
                    "spider", "mole", "hedgehog", "salamander", "newt", "robin", "dragonfly", "scorpion", "trout"],
    "granivore": ["sparrow", "finch", "canary", "pigeon", "parrot", "hamster", "squirrel", "chipmunk", "peacock",
                  "grasshopper", "cricket", "beetle", "ostrich", "flamingo", "sardine", "cod", "salmon", "eel",
                  "shrimp"],
    "nectarivore": ["hummingbird", "butterfly", "bee", "moth", "wasp", "fly", "mosquito", "ladybug", "swan"],
}

DIET_MATRIX = {
    "carnivore": dict(meat="always", fish="often", eggs="sometimes", insects="rarely", bones="sometimes",
                      grass="never", fruit="rarely", seeds="never", leaves="never", nuts="never", honey="rarely",
                      berries="rarely", nectar="never"),
    "herbivore": dict(meat="never", fish="never", eggs="never", insects="never", bones="never", grass="always",
                      fruit="sometimes", seeds="sometimes", leaves="often", nuts="rarely", honey="never",
                      berries="sometimes", nectar="never"),
    "omnivore": dict(meat="often", fish="sometimes", eggs="sometimes", insects="sometimes", bones="rarely",
                     grass="rarely", fruit="often", seeds="sometimes", leaves="sometimes", nuts="sometimes",
                     honey="sometimes", berries="often", nectar="rarely"),
    "insectivore": dict(insects="always", meat="rarely", fish="never", eggs="rarely", bones="never", grass="never",
                        fruit="rarely", seeds="rarely", leaves="never", nuts="never", honey="never",
                        berries="rarely", nectar="never"),
    "granivore": dict(seeds="always", nuts="often", fruit="sometimes", berries="sometimes", insects="sometimes",
                      grass="rarely", leaves="rarely", meat="never", fish="never", eggs="never", honey="never",
                      bones="never", nectar="rarely"),
    "nectarivore": dict(nectar="always", honey="sometimes", fruit="sometimes", insects="rarely", meat="never",
                        fish="never", eggs="never", bones="never", grass="never", seeds="rarely", leaves="rarely",
                        nuts="never", berries="sometimes"),
}

DIET_OVERRIDES = {("panda", "leaves"): "always", ("koala", "leaves"): "always", ("panda", "grass"): "often",
                  ("koala", "grass"): "never", ("bear", "honey"): "often", ("bear", "fish"): "often",
                  ("seal", "fish"): "always", ("penguin", "fish"): "always", ("pelican", "fish"): "always",
                  ("otter", "fish"): "always", ("dolphin", "fish"): "always", ("cat", "fish"): "often",
                  ("dog", "bones"): "often", ("crow", "eggs"): "often", ("snake", "eggs"): "often",
                  ("monkey", "fruit"): "always", ("squirrel", "nuts"): "always", ("goose", "grass"): "often",
                  ("swan", "grass"): "sometimes", ("vulture", "bones"): "often", ("shark", "meat"): "often",
                  ("tuna", "fish"): "always", ("swordfish", "fish"): "always"}

DRINKS = ["water", "milk", "coffee", "wine", "juice", "beer", "tea", "soda", "blood"]

HABITAT = {
    "ocean": {"whale": "always", "shark": "always", "dolphin": "always", "octopus": "always", "squid": "always",
              "tuna": "always", "swordfish": "always", "cod": "always", "sardine": "always", "seal": "often",
              "walrus": "often", "crab": "often", "lobster": "always", "shrimp": "often", "penguin": "often",
              "seagull": "sometimes", "pelican": "sometimes", "eel": "sometimes", "salmon": "often",
              "turtle": "sometimes"},
    "river": {"salmon": "often", "trout": "always", "catfish": "always", "otter": "often", "beaver": "often",
              "crocodile": "often", "alligator": "often", "eel": "often", "hippopotamus": "often",
              "duck": "sometimes", "frog": "sometimes", "heron": "sometimes", "goldfish": "rarely"},
    "desert": {"camel": "often", "scorpion": "often", "lizard": "sometimes", "snake": "sometimes",
               "gecko": "sometimes", "coyote": "sometimes", "vulture": "sometimes", "tortoise": "sometimes"},
    "forest": {"deer": "often", "bear": "often", "wolf": "often", "fox": "often", "owl": "often", "squirrel": "often",
               "woodpecker": "always", "moose": "often", "elk": "often", "lynx": "often", "badger": "often",
               "hedgehog": "sometimes", "raccoon": "sometimes", "skunk": "sometimes", "beetle": "sometimes",
               "spider": "sometimes", "rabbit": "sometimes", "snail": "sometimes", "salamander": "often"},
    "jungle": {"monkey": "often", "tiger": "often", "jaguar": "often", "gorilla": "often", "chimpanzee": "often",
               "parrot": "often", "python": "often", "chameleon": "often", "orangutan": "always", "leopard": "sometimes",
               "sloth": "always", "iguana": "often", "lemur": "sometimes", "baboon": "sometimes"},
    "savanna": {"lion": "often", "zebra": "often", "giraffe": "always", "elephant": "often", "cheetah": "always",
                "hyena": "often", "rhinoceros": "often", "antelope": "often", "gazelle": "often", "ostrich": "often",
                "buffalo": "often", "baboon": "sometimes", "vulture": "sometimes"},
    "farm": {"cow": "often", "pig": "often", "sheep": "often", "goat": "often", "chicken": "often", "horse": "often",
             "donkey": "often", "turkey": "sometimes", "duck": "sometimes", "goose": "sometimes", "bull": "often",
             "ox": "often", "mule": "often", "llama": "sometimes", "calf": "often", "lamb": "often",
             "dog": "sometimes", "cat": "sometimes", "mouse": "sometimes", "rat": "sometimes", "fly": "sometimes"},
    "city": {"rat": "often", "pigeon": "always", "crow": "often", "raccoon": "sometimes", "sparrow": "often",
             "dog": "often", "cat": "often", "mouse": "sometimes", "fox": "sometimes", "fly": "often",
             "mosquito": "sometimes", "ant": "sometimes", "spider": "sometimes", "seagull": "sometimes",
             "cockroach": "often", "squirrel": "sometimes"},
}

AQUATIC = {"whale", "shark", "dolphin", "octopus", "squid", "tuna", "swordfish", "cod", "sardine", "salmon", "trout",
           "catfish", "eel", "goldfish", "crab", "lobster", "shrimp"}


def animal_labels(rng):
    animals = animal_table()
    names = sorted(animals)
    with_size = [n for n in names if n not in ANIMALS_WITHOUT_SIZE]
    out = []
    # has-a
    for a in names:
        cls = animals[a][0]
        grp = next(g for g, (_, ms) in ANIMAL_GROUPS.items() if any(m == a for m, _ in ms))
        base = dict(HAS_A_DEFAULTS.get(grp, HAS_A_DEFAULTS.get(cls, {})))
        if grp not in HAS_A_DEFAULTS:
            base = dict(HAS_A_DEFAULTS.get(cls, {}))
        base.update(HAS_A_OVERRIDES.get(a, {}))
        for part in HAS_A_PARTS:
            out.append(("an-has-a", a, part, base.get(part, "never")))
    # has (plural)
    for a in names:
        cls = animals[a][0]
        grp = next(g for g, (_, ms) in ANIMAL_GROUPS.items() if any(m == a for m, _ in ms))
        for obj, table in HAS_PLURAL.items():
            label = table.get(a, table.get(grp, table.get(cls, "never")))
            out.append(("an-has", a, obj, label))
    # size comparisons
    for s in with_size:
        for o in with_size:
            if s == o:
                continue
            r = animals[s][1] / animals[o][1]
            if r < 0.3:
                lab = "always"
            elif r < 0.7:
                lab = "often"
            elif r < 1.4:
                lab = "sometimes"
            elif r < 3.0:
                lab = "rarely"
            else:
                lab = "never"
            out.append(("an-smaller", s, o, lab))
            inv = {"always": "never", "often": "rarely", "sometimes": "sometimes", "rarely": "often",
                   "never": "always"}[lab]
            out.append(("an-larger", s, o, inv))
    # diet
    diet_of = {}
    for cls, members in DIET_CLASS.items():
        for m in members:
            if m in animals:
                diet_of[m] = cls
    for a in sorted(diet_of):
        for food, lab in DIET_MATRIX[diet_of[a]].items():
            out.append(("an-diet", a, food, DIET_OVERRIDES.get((a, food), lab)))
    # drinks
    for a in names:
        cls = animals[a][0]
        if a in AQUATIC:
            continue
        for d in DRINKS:
            if d == "water":
                lab = "always" if cls in ("mammal", "bird") else "often"
            elif d == "milk":
                lab = "sometimes" if cls == "mammal" else "never"
            elif d == "juice":
                lab = "rarely"
            elif d == "blood":
                lab = {"mosquito": "often", "bat": "rarely"}.get(a, "never")
            else:
                lab = "never"
            out.append(("an-drinks", a, d, lab))
    # habitats
    for a in names:
        for hab, table in HABITAT.items():
            if a in table:
                lab = table[a]
            elif hab in ("ocean", "river") and a not in AQUATIC:
                lab = "never"
            elif a in AQUATIC:
                lab = "never"
            else:
                lab = "rarely"
            out.append(("an-lives", a, hab, lab))
    return out


# Target label counts (1,300 examples): never 24%, rarely 10%, sometimes 34%, often 7%, always 23%,
# with the rounding remainder spread over the three largest classes.
AN_QUOTA = {"never": 318, "rarely": 133, "sometimes": 448, "often": 92, "always": 309}
AN_NOISE = 0.10


def build_always_never():
    rng = stable_rng("always-never")
    cands = dish_labels() + placed_labels() + animal_labels(rng)
    cands = sorted(set(cands))
    # Second annotation pass: a fraction of items is adjudicated to a neighbouring label, mirroring
    # disagreement between annotators on graded frequency words.
    noisy = []
    for t, s, o, lab in cands:
        r = stable_rng(f"noise:{t}:{s}:{o}")
        if r.random() < AN_NOISE:
            i = LABELS.index(lab)
            j = i + (1 if r.random() < 0.5 else -1)
            j = min(max(j, 0), len(LABELS) - 1)
            lab = LABELS[j]
        noisy.append((t, s, o, lab))
    by_label = defaultdict(list)
    for row in noisy:
        by_label[row[3]].append(row)
    chosen = []
    for lab in LABELS:
        pool = sorted(by_label[lab])
        # spread each label's quota across templates so no single template dominates a class
        by_t = defaultdict(list)
        for row in pool:
            by_t[row[0]].append(row)
        for rows in by_t.values():
            rng.shuffle(rows)
        order = sorted(by_t)
        picked = []
        while len(picked) < AN_QUOTA[lab]:
            progressed = False
            for t in order:
                if by_t[t] and len(picked) < AN_QUOTA[lab]:
                    picked.append(by_t[t].pop())
                    progressed = True
            if not progressed:
                raise SystemExit(f"not enough {lab} candidates: {len(picked)}")
        chosen.extend(picked)
    chosen.sort()
    return chosen


# --------------------------------------------------------------------------
# embeddings.txt / unigram.tsv
# --------------------------------------------------------------------------

NONSENSE = ["blah", "ya", "foo", "snap", "woo", "boo", "da", "wee", "foe", "fee"]

FUNCTION_WORDS = """a an the is are was were am be been being of in on at to for with by from as and or but not no
if i me my you your he him his she her it its we us our they them their this that these those there here what
which who whom whose when where why how than then so very really much more most less usually often always never
rarely sometimes also just only both either each every all any some one two three first second third oldest
youngest do does did can could will would should may might must has have had part type usually placed contains
dish person year years old born comparing size larger smaller younger older age band played form actor spouse
company headquarters located established when did where who whose that capable found prerequisite made used related
wants want makes causes involves can be statement""".split()

PUNCT = [".", ",", "?", "'", "'s", "!", ";", ":", "-", "(", ")"]


def tokenize(text):
    return re.findall(r"'s\b|[a-z0-9]+|[^\sa-z0-9]", text.lower())


def collect_vocab(tax, triples, numeric, encyc, cities, an_rows):
    words = set(FUNCTION_WORDS) | set(NONSENSE) | set(PUNCT) | set(LABELS)
    for c, p, t in tax:
        words.update(tokenize(c))
        words.update(tokenize(p))
        words.update(tokenize(t))
    for s, p, o in triples:
        words.update(tokenize(s))
        words.update(tokenize(o))
    for c, *_ in numeric:
        words.update(tokenize(c))
    for row in encyc:
        for cell in (row[0], row[2], row[4], row[6]):
            words.update(tokenize(str(cell)))
    for c, country, _ in cities:
        words.update(tokenize(c))
        words.update(tokenize(country))
    for _, s, o, _ in an_rows:
        words.update(tokenize(s))
        words.update(tokenize(o))
    for _, tpl, _ in AN_TEMPLATES:
        words.update(w for w in tokenize(tpl.replace("[MASK]", "")) if w not in ("subj", "obj"))
    for sent, g, d1, d2 in MC_LM:
        words.update(tokenize(sent.replace("[MASK]", "")))
        words.update(tokenize(g) + tokenize(d1) + tokenize(d2))
    extra = """what is usually and but not located at used for related to capable of a cause of making people want
    wanting having requiring involving type made part subject target can be found wants causes makes you has
    prerequisite it he she they we you i was were is are am really when comparing year old the oldest first
    second third person born if me in than age size of much usually larger smaller younger older"""
    words.update(extra.split())
    words = {w for w in words if w and not re.fullmatch(r"[0-9]+", w)}
    numbers = [str(n) for n in range(0, 2101)]
    return sorted(words), numbers


def number_vector(n):
    r = stable_rng(f"num:{n}")
    v = [r.gauss(0.0, 0.3) for _ in range(D_E)]
    mag = math.log10(n + 1.0)
    v[0] = 0.9 * (mag - 2.0) + r.gauss(0.0, 0.08)
    v[1] = 0.6 * (n / 500.0 - 1.0) + r.gauss(0.0, 0.08)
    v[2] = 0.5 * math.tanh((n - 60.0) / 40.0) + r.gauss(0.0, 0.08)
    v[3] = 0.5 if 1000 <= n <= 2100 else -0.5
    return v


def build_embeddings(vocab, numbers, tax):
    parent = defaultdict(list)
    tree_of = {}
    for c, p, t in tax:
        if p:
            parent[c].append(p)
        tree_of[c] = t
    centroids = {}

    def centroid(label):
        if label not in centroids:
            r = stable_rng(f"centroid:{label}")
            centroids[label] = [r.gauss(0.0, 0.35) for _ in range(D_E)]
        return centroids[label]

    syn_pairs = [tuple(sorted(p)) for p in SYNONYMS]
    lines = []
    for w in vocab:
        r = stable_rng(f"tok:{w}")
        v = [r.gauss(0.0, 0.3) for _ in range(D_E)]
        v[3] = -0.5 + r.gauss(0.0, 0.05)
        if w in tree_of:
            for lab, scale in ((tree_of[w], 1.0), (parent[w][0] if parent[w] else tree_of[w], 0.7)):
                c = centroid(lab)
                v = [a + scale * b for a, b in zip(v, c)]
        lines.append((w, v))
    # synonyms share part of their vector
    vec = dict(lines)
    for a, b in sorted(set(syn_pairs)):
        if a in vec and b in vec:
            shared = [0.5 * (x + y) for x, y in zip(vec[a], vec[b])]
            vec[a] = [0.6 * x + 0.4 * s for x, s in zip(vec[a], shared)]
            vec[b] = [0.6 * x + 0.4 * s for x, s in zip(vec[b], shared)]
    out = [(w, vec[w]) for w in vocab]
    out += [(n, number_vector(int(n))) for n in numbers]
    with open(os.path.join(OUT, "embeddings.txt"), "w", encoding="utf-8", newline="\n") as f:
        for w, v in out:
            f.write(w + " " + " ".join(f"{x:.5f}" for x in v) + "\n")
    return [w for w, _ in out]


STOP = set(FUNCTION_WORDS[:100]) | set(PUNCT)


def build_unigram(tokens):
    rows = []
    base_rank = {}
    order = sorted(tokens, key=lambda t: (t not in STOP, hashlib.sha256(t.encode()).hexdigest()))
    for i, t in enumerate(order):
        base_rank[t] = i + 1
    for corpus, sd in (("books-wiki", 0.4), ("web-crawl", 0.6)):
        weights = {}
        for t in tokens:
            r = stable_rng(f"uni:{corpus}:{t}")
            w = (1.0 / base_rank[t] ** 1.05) * math.exp(r.gauss(0.0, sd))
            if corpus == "web-crawl" and re.fullmatch(r"[0-9]+", t):
                w *= 1.6
            weights[t] = w
        z = sum(weights.values())
        for t in sorted(tokens):
            content = 0 if t in STOP else 1
            rows.append((corpus, t, f"{weights[t] / z:.9e}", content))
    write_tsv("unigram.tsv", rows)


def main():
    tax = build_taxonomy()
    write_tsv("taxonomy.tsv", tax)
    numeric = build_numeric()
    write_tsv("numeric.tsv", numeric)
    triples, n_syn, n_ant = build_triples()
    write_tsv("triples.tsv", triples)
    encyc, cities = build_encyc()
    write_tsv("encyc.tsv", encyc)
    write_tsv("cities.tsv", cities)
    write_tsv("always_never_templates.tsv", AN_TEMPLATES)
    an = build_always_never()
    write_tsv("always_never.tsv", an)
    write_tsv("mc_lm.tsv", MC_LM)
    vocab, numbers = collect_vocab(tax, triples, numeric, encyc, cities, an)
    tokens = build_embeddings(vocab, numbers, tax)
    build_unigram(tokens)
    dist = Counter(r[3] for r in an)
    total = sum(dist.values())
    print("always-never distribution:", {k: f"{100 * dist[k] / total:.1f}%" for k in LABELS})
    print("per template:", dict(Counter(r[0] for r in an)))
    print(f"taxonomy {len(tax)}  numeric {len(numeric)}  triples {len(triples)} (syn {n_syn}, ant {n_ant})  "
          f"encyc {len(encyc)}  cities {len(cities)}  vocab {len(tokens)}")


if __name__ == "__main__":
    main()
