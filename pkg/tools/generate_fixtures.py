"""Regenerate the fixture lexicons and the mini-gold corpus.

Run from the repository root:

    python3 tools/generate_fixtures.py

Output is deterministic (fixed RNG seed) and committed under
src/codemixkit/fixtures/, so this script only needs to run again when the
fixture design changes.
"""

from __future__ import annotations

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "src", "codemixkit", "fixtures")
LEXDIR = os.path.join(FIXTURES, "lexicons")

BN_WORDS = """
ami tumi apni amra tomra tara se o ke ki keno kothay kokhon kivabe
bhalo kharap baje khub onek ekta duto ghor bari raat din ajke kalke
gelo holo hobe kore koreche korbo korchi bolechi bole bolbe dekha dekhe
dekhlam jaye jabo jacchi chilo chole ar eta oto eto emon kichu sob shob
chele meye manush pagol moja mishti khushi kosto boka bekar chinta
jhogra betha dhur shundor darun pochondo osadharon besh sera lagche
laglo lage amar tomar tar der ta te khabar khela gan cinema boi porte
pori likhi hasi kanna mon prithibi akash brishti jol agun batash valo
balo thik thak abar ekhon tokhon pore age samne pichone upore niche
bhitore baire notun purono boro choto lomba khato garam thanda roud
megh jhor nodi pahar gram shohor rasta gari bas train plane dokan
bazar taka poisa kaj chakri school college porikkha result pash fail
bondhu paribar baba maa bhai bon dada didi mama kaka thakur pujo eid
biya utsob anondo dukkho raag bhoy lojja ashol nokol satti mittha
proshno uttor golpo kobita gaan sur taal chobi ranna khaoa ghum
onekdin por fire eshe nijeke bikheto toh hoyeche
""".split()

EN_WORDS = """
the of and a to in is you that it he was for on are as with his they
at be this have from or one had by word but what some we can out other
were all there when up use your how said an each she which do their
time if will way about many then them write would like so these her
long make thing see him two has look more day could go come did number
no most people my than first water been call who its now find down
side man new great where help through much before line right too mean
old any same tell boy follow came want show also around form three
small set put end does another well large must big even such because
turn here why ask went men read need land different home us move try
kind hand picture again change off play spell air away animal house
point page letter mother answer found study still learn should america
world high every near add food between own below country plant last
school father keep tree never start city earth eye light thought head
under story saw left dont few while along might close something seem
next hard open example begin life always those both paper together got
group often run important until children walk white sea began grow
took river four carry state once book hear stop without second later
miss idea enough eat face watch far really almost let above girl
sometimes mountain cut young talk soon list song being leave family
good bad love best happy sad movie film script day night morning
evening very nice amazing awesome terrible awful worst hate boring
tiring flop poor problem busy bogus pain special famous comedy better
excellent fantastic win blessed i am yes hall building yellow shopping
mall release ending tale fairy spotlight
""".split()

SUFFIXES = ["ing", "ed", "ism", "ious", "ness", "ly", "er", "est", "tion", "ful"]

ACRONYMS = [
    ("omg", "oh my god", 0),
    ("lol", "laughing out loud", 1),
    ("bbl", "be back later", 0),
    ("gr8", "great", 1),
    ("thx", "thanks", 1),
    ("hpy", "happy", 1),
    ("idk", "i do not know", 0),
    ("smh", "shaking my head", -1),
    ("ffs", "for f sake", -1),
    ("rofl", "rolling on floor laughing", 1),
]

NEG_BN = "na nei noy nai nahi chara bina noi dhurr nishchoi-na kokhono-na".split()
NEG_EN = "not no never none neither nor cannot dont didnt wont isnt arent".split()

POSU = """
bhalo besh shundor darun moja pochondo osadharon mishti khushi anondo
sera hit love best good better special famous happy great awesome nice
amazing blessed excellent fantastic win comedy
""".split()

NEGU = """
kharap baje kosto boka bekar chinta jhogra betha dukkho
raag poor bad problem old sad busy bogus pain terrible awful worst
hate boring tiring flop angry dhurr
""".split()

PHRASES = [
    (-1, "boshe dekha jaye na"),
    (-1, "bhalo lage na"),
    (1, "khub bhalo laglo"),
    (1, "onek shundor hoyeche"),
    (1, "darun hit movie"),
    (-1, "mon kharap"),
    (1, "happily ever after"),
    (-1, "couldnt sleep"),
    (1, "sera movie hobe"),
    (-1, "ekdom baje chilo"),
    (1, "moja pelam onek"),
]

SWN = [
    ("good", 0.75, 0.0, 0.25),
    ("bad", 0.0, 0.75, 0.25),
    ("happy", 0.8, 0.0, 0.2),
    ("sad", 0.0, 0.8, 0.2),
    ("love", 0.7, 0.1, 0.2),
    ("hate", 0.05, 0.85, 0.1),
    ("nice", 0.6, 0.0, 0.4),
    ("poor", 0.0, 0.6, 0.4),
    ("great", 0.75, 0.0, 0.25),
    ("terrible", 0.0, 0.9, 0.1),
    ("best", 0.9, 0.0, 0.1),
    ("worst", 0.0, 0.9, 0.1),
    ("amazing", 0.8, 0.0, 0.2),
    ("awful", 0.0, 0.8, 0.2),
    ("special", 0.5, 0.0, 0.5),
    ("problem", 0.0, 0.5, 0.5),
    ("boring", 0.0, 0.6, 0.4),
    ("excellent", 0.9, 0.0, 0.1),
    ("pain", 0.0, 0.7, 0.3),
    ("win", 0.7, 0.0, 0.3),
]

SOCAL = [
    ("good", 3.0), ("great", 4.0), ("bad", -3.0), ("terrible", -4.0),
    ("poor", -2.0), ("nice", 2.0), ("awful", -4.0), ("amazing", 4.0),
    ("boring", -2.0), ("love", 3.0), ("hate", -3.0), ("happy", 3.0),
    ("sad", -2.0), ("problem", -2.0), ("best", 5.0), ("worst", -5.0),
    ("special", 2.0), ("excellent", 4.0), ("pain", -3.0), ("fantastic", 4.0),
]

INTENSIFIERS = [
    ("very", 1.0), ("really", 1.5), ("extremely", 2.0), ("khub", 1.5),
    ("onek", 1.0), ("totally", 1.5), ("slightly", -0.5), ("somewhat", -0.3),
    ("barely", -1.0), ("hardly", -1.0),
]

NRC = [
    ("good", 1, 0), ("bad", 0, 1), ("happy", 1, 0), ("sad", 0, 1),
    ("love", 1, 0), ("hate", 0, 1), ("blessed", 1, 0), ("angry", 0, 1),
    ("win", 1, 0), ("pain", 0, 1), ("special", 1, 0), ("problem", 0, 1),
    ("famous", 1, 0), ("bogus", 0, 1), ("comedy", 1, 0), ("busy", 0, 1),
    ("excellent", 1, 0), ("terrible", 0, 1), ("nice", 1, 0), ("awful", 0, 1),
]

EMOTICONS = [
    ("🙂", 1), ("😀", 1), ("😍", 1), ("😊", 1), ("<3", 1), (":)", 1),
    (":D", 1), ("😠", -1), ("😡", -1), ("😢", -1), ("😞", -1), (":(", -1),
]


def write_lexicons():
    os.makedirs(LEXDIR, exist_ok=True)

    def write(name, lines):
        with open(os.path.join(LEXDIR, name), "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")

    write("bn_words.txt", sorted(set(BN_WORDS)))
    write("en_words.txt", sorted(set(EN_WORDS)))
    write("suffixes_en.txt", SUFFIXES)
    write("acronyms.txt", [f"{a}\t{e}\t{p}" for a, e, p in ACRONYMS])
    write("negations_bn.txt", NEG_BN)
    write("negations_en.txt", NEG_EN)
    write("posu.txt", sorted(set(POSU)))
    write("negu.txt", sorted(set(NEGU)))
    write("phrases.tsv", [f"{p}\t{t}" for p, t in PHRASES])
    write("swn.tsv", [f"{w}\t{p}\t{n}\t{o}" for w, p, n, o in SWN])
    write("socal.tsv", [f"{w}\t{s}" for w, s in SOCAL])
    write("socal_intensifiers.tsv", [f"{w}\t{s}" for w, s in INTENSIFIERS])
    write("nrc.tsv", [f"{w}\t{p}\t{n}" for w, p, n in NRC])
    write("emoticons.tsv", [f"{e}\t{p}" for e, p in EMOTICONS])


BN_FILLER = [w for w in BN_WORDS if w not in POSU + NEGU + NEG_BN]
EN_FILLER = [
    w for w in "movie film script day time story song house city water book people friend".split()
]
POS_EMOJI = ["🙂", "😀", "😍"]
NEG_EMOJI = ["😠", "😢", "😞"]
POS_HASHTAGS = ["#SoHappy", "#best_movie", "#darun_comedy"]
NEG_HASHTAGS = ["#so_sad", "#bad_day", "#worst_movie"]
POS_BN = [w for w in POSU if w in BN_WORDS or w in ("sera", "darun", "moja")]
NEG_BN_WORDS = [w for w in NEGU if w in BN_WORDS]
POS_EN = [w for w in POSU if w in EN_WORDS]
NEG_EN_WORDS = [w for w in NEGU if w in EN_WORDS]


def lang_of(word: str) -> str:
    in_bn = word in BN_WORDS
    in_en = word in EN_WORDS
    if in_bn and not in_en:
        return "bn"
    if in_en and not in_bn:
        return "en"
    return "bn" if in_bn else "en"


def make_sentence(rng: random.Random, polarity: int):
    pairs = []  # (token, tag)
    length = rng.randint(6, 11)
    for _ in range(length):
        if rng.random() < 0.55:
            w = rng.choice(BN_FILLER)
        else:
            w = rng.choice(EN_FILLER)
        pairs.append((w, lang_of(w)))
    if polarity != 0:
        polar_pool = (POS_BN + POS_EN) if polarity > 0 else (NEG_BN_WORDS + NEG_EN_WORDS)
        for _ in range(rng.randint(2, 3)):
            w = rng.choice(polar_pool)
            pairs.insert(rng.randrange(len(pairs) + 1), (w, lang_of(w)))
        if polarity > 0 and rng.random() < 0.3:
            for _ in range(2):
                w = rng.choice(POS_BN)
                pairs.append((w, "bn"))
                pairs.append(("hoyeche", "bn"))
                pairs.append(("na", "bn"))
        roll = rng.random()
        if roll < 0.2:
            emoji = rng.choice(POS_EMOJI if polarity > 0 else NEG_EMOJI)
            pairs.append((emoji, "un"))
        elif roll < 0.3:
            tag = rng.choice(POS_HASHTAGS if polarity > 0 else NEG_HASHTAGS)
            pairs.append((tag, "un"))
    pairs.append((".", "un"))
    text = " ".join(tok for tok, _ in pairs)
    return text, pairs


def write_mini_gold():
    rng = random.Random(20170423)
    records = []
    item_id = 1
    for polarity in (1, -1, 0):
        for _ in range(50):
            text, pairs = make_sentence(rng, polarity)
            records.append(
                {
                    "id": item_id,
                    "lang_tagged_text": " ".join(
                        f"{tok}\\{tag}" for tok, tag in pairs
                    ),
                    "sentiment": polarity,
                    "text": text,
                }
            )
            item_id += 1
    rng.shuffle(records)
    with open(os.path.join(FIXTURES, "mini_gold.json"), "w", encoding="utf-8") as fh:
        json.dump(
            sorted(records, key=lambda r: r["id"]),
            fh, ensure_ascii=False, indent=2, sort_keys=True,
        )


def write_sample_record():
    tagged = (
        "Onekdin\\bn por\\bn spotlight\\en e\\bn fire\\bn eshe\\bn nijeke\\bn "
        "besh\\bn bikheto\\bn bikheto\\bn lagche\\bn ,\\un I\\en am\\en toh\\bn "
        "very\\en hpy\\en .\\un"
    )
    text = (
        "Onekdin por spotlight e fire eshe nijeke besh bikheto bikheto "
        "lagche, I am toh very hpy."
    )
    record = [
        {"id": 83, "lang_tagged_text": tagged, "sentiment": 1, "text": text}
    ]
    with open(
        os.path.join(FIXTURES, "sample_record_83.json"), "w", encoding="utf-8"
    ) as fh:
        json.dump(record, fh, ensure_ascii=False, indent=2, sort_keys=True)


def write_seeds():
    # Seed list: the fixture Bengali vocabulary with synthetic frequencies.
    words = sorted(set(BN_WORDS))
    rng = random.Random(7)
    freqs = sorted((rng.randint(1, 400) for _ in words), reverse=True)
    ranked = sorted(zip(words, freqs), key=lambda wf: (-wf[1], wf[0]))
    with open(os.path.join(LEXDIR, "seeds.tsv"), "w", encoding="utf-8") as fh:
        for w, f in ranked:
            fh.write(f"{w}\t{f}\n")


if __name__ == "__main__":
    write_lexicons()
    write_seeds()
    write_mini_gold()
    write_sample_record()
    print("fixtures written to", os.path.normpath(FIXTURES))
