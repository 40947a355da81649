"""Rule-based English verb conjugation and subject number classification.

Deterministic by design: a bundled irregular-verb table plus regular
suffix rules, so realized sentences are stable across environments. Only
the forms the hypothesis templates need are produced (third person
singular present, simple past, past participle).
"""

from __future__ import annotations

# lemma -> (simple past, past participle); regular verbs are absent.
IRREGULAR_VERBS: dict[str, tuple[str, str]] = {
    "arise": ("arose", "arisen"),
    "awake": ("awoke", "awoken"),
    "bear": ("bore", "borne"),
    "beat": ("beat", "beaten"),
    "become": ("became", "become"),
    "befall": ("befell", "befallen"),
    "begin": ("began", "begun"),
    "behold": ("beheld", "beheld"),
    "bend": ("bent", "bent"),
    "bet": ("bet", "bet"),
    "bid": ("bid", "bid"),
    "bind": ("bound", "bound"),
    "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"),
    "blow": ("blew", "blown"),
    "break": ("broke", "broken"),
    "breed": ("bred", "bred"),
    "bring": ("brought", "brought"),
    "broadcast": ("broadcast", "broadcast"),
    "build": ("built", "built"),
    "burst": ("burst", "burst"),
    "buy": ("bought", "bought"),
    "cast": ("cast", "cast"),
    "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"),
    "come": ("came", "come"),
    "cost": ("cost", "cost"),
    "creep": ("crept", "crept"),
    "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"),
    "dive": ("dove", "dived"),
    "do": ("did", "done"),
    "draw": ("drew", "drawn"),
    "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"),
    "dwell": ("dwelt", "dwelt"),
    "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"),
    "feed": ("fed", "fed"),
    "feel": ("felt", "felt"),
    "fight": ("fought", "fought"),
    "find": ("found", "found"),
    "flee": ("fled", "fled"),
    "fling": ("flung", "flung"),
    "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"),
    "forecast": ("forecast", "forecast"),
    "foresee": ("foresaw", "foreseen"),
    "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"),
    "forgo": ("forwent", "forgone"),
    "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"),
    "give": ("gave", "given"),
    "go": ("went", "gone"),
    "grind": ("ground", "ground"),
    "grow": ("grew", "grown"),
    "hang": ("hung", "hung"),
    "have": ("had", "had"),
    "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"),
    "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"),
    "keep": ("kept", "kept"),
    "kneel": ("knelt", "knelt"),
    "know": ("knew", "known"),
    "lay": ("laid", "laid"),
    "lead": ("led", "led"),
    "leap": ("leapt", "leapt"),
    "leave": ("left", "left"),
    "lend": ("lent", "lent"),
    "let": ("let", "let"),
    "lie": ("lay", "lain"),
    "light": ("lit", "lit"),
    "lose": ("lost", "lost"),
    "make": ("made", "made"),
    "mean": ("meant", "meant"),
    "meet": ("met", "met"),
    "mislead": ("misled", "misled"),
    "mistake": ("mistook", "mistaken"),
    "misunderstand": ("misunderstood", "misunderstood"),
    "outdo": ("outdid", "outdone"),
    "outgrow": ("outgrew", "outgrown"),
    "overcome": ("overcame", "overcome"),
    "overdo": ("overdid", "overdone"),
    "overhear": ("overheard", "overheard"),
    "oversee": ("oversaw", "overseen"),
    "overtake": ("overtook", "overtaken"),
    "overthrow": ("overthrew", "overthrown"),
    "partake": ("partook", "partaken"),
    "pay": ("paid", "paid"),
    "prove": ("proved", "proven"),
    "put": ("put", "put"),
    "quit": ("quit", "quit"),
    "read": ("read", "read"),
    "rebuild": ("rebuilt", "rebuilt"),
    "redo": ("redid", "redone"),
    "remake": ("remade", "remade"),
    "repay": ("repaid", "repaid"),
    "rethink": ("rethought", "rethought"),
    "rewrite": ("rewrote", "rewritten"),
    "rid": ("rid", "rid"),
    "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"),
    "rise": ("rose", "risen"),
    "run": ("ran", "run"),
    "saw": ("sawed", "sawn"),
    "say": ("said", "said"),
    "see": ("saw", "seen"),
    "seek": ("sought", "sought"),
    "sell": ("sold", "sold"),
    "send": ("sent", "sent"),
    "set": ("set", "set"),
    "sew": ("sewed", "sewn"),
    "shake": ("shook", "shaken"),
    "shed": ("shed", "shed"),
    "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"),
    "show": ("showed", "shown"),
    "shrink": ("shrank", "shrunk"),
    "shut": ("shut", "shut"),
    "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"),
    "sit": ("sat", "sat"),
    "slay": ("slew", "slain"),
    "sleep": ("slept", "slept"),
    "slide": ("slid", "slid"),
    "sling": ("slung", "slung"),
    "slit": ("slit", "slit"),
    "sow": ("sowed", "sown"),
    "speak": ("spoke", "spoken"),
    "speed": ("sped", "sped"),
    "spend": ("spent", "spent"),
    "spin": ("spun", "spun"),
    "spit": ("spat", "spat"),
    "split": ("split", "split"),
    "spread": ("spread", "spread"),
    "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"),
    "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"),
    "stink": ("stank", "stunk"),
    "stride": ("strode", "stridden"),
    "strike": ("struck", "struck"),
    "string": ("strung", "strung"),
    "strive": ("strove", "striven"),
    "swear": ("swore", "sworn"),
    "sweep": ("swept", "swept"),
    "swell": ("swelled", "swollen"),
    "swim": ("swam", "swum"),
    "swing": ("swung", "swung"),
    "take": ("took", "taken"),
    "teach": ("taught", "taught"),
    "tear": ("tore", "torn"),
    "tell": ("told", "told"),
    "think": ("thought", "thought"),
    "throw": ("threw", "thrown"),
    "thrust": ("thrust", "thrust"),
    "tread": ("trod", "trodden"),
    "undergo": ("underwent", "undergone"),
    "understand": ("understood", "understood"),
    "undertake": ("undertook", "undertaken"),
    "undo": ("undid", "undone"),
    "unwind": ("unwound", "unwound"),
    "uphold": ("upheld", "upheld"),
    "upset": ("upset", "upset"),
    "wake": ("woke", "woken"),
    "wear": ("wore", "worn"),
    "weave": ("wove", "woven"),
    "weep": ("wept", "wept"),
    "win": ("won", "won"),
    "wind": ("wound", "wound"),
    "withdraw": ("withdrew", "withdrawn"),
    "withhold": ("withheld", "withheld"),
    "withstand": ("withstood", "withstood"),
    "wring": ("wrung", "wrung"),
    "write": ("wrote", "written"),
}

IRREGULAR_PAST_FORMS = frozenset(p for p, _ in IRREGULAR_VERBS.values())
IRREGULAR_PARTICIPLES = frozenset(pp for _, pp in IRREGULAR_VERBS.values())

VOWELS = "aeiou"

# Final-consonant doubling applies to stressed final syllables; polysyllabic
# verbs stressed on the last syllable are listed explicitly.
_DOUBLING_FINAL_STRESS = frozenset(
    """
    admit allot annul commit compel concur confer control defer deter equip
    excel incur infer occur omit patrol permit prefer propel rebut recur
    refer regret remit submit transmit acquit
    """.split()
)

# Base forms ending in -ed that must not be mistaken for past inflections.
_ED_BASE_FORMS = frozenset(
    "need exceed proceed succeed heed embed shed wed sled".split()
)


def _doubles_final_consonant(lemma: str) -> bool:
    if len(lemma) < 3:
        return False
    if lemma in _DOUBLING_FINAL_STRESS:
        return True
    c1, v, c2 = lemma[-3], lemma[-2], lemma[-1]
    if c2 in "wxy" or v not in VOWELS or c1 in VOWELS:
        return False
    # single vowel group implies a single (stressed) syllable
    groups = 0
    prev_vowel = False
    for ch in lemma:
        is_v = ch in VOWELS
        if is_v and not prev_vowel:
            groups += 1
        prev_vowel = is_v
    return groups == 1


def present_3sg(lemma: str) -> str:
    """Third person singular present form."""
    if lemma == "be":
        return "is"
    if lemma == "have":
        return "has"
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        return lemma + "es"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ies"
    return lemma + "s"


def past(lemma: str) -> str:
    """Simple past form (singular agreement for ``be``)."""
    if lemma == "be":
        return "was"
    irregular = IRREGULAR_VERBS.get(lemma)
    if irregular:
        return irregular[0]
    return _regular_ed(lemma)


def past_participle(lemma: str) -> str:
    if lemma == "be":
        return "been"
    irregular = IRREGULAR_VERBS.get(lemma)
    if irregular:
        return irregular[1]
    return _regular_ed(lemma)


def _regular_ed(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "d"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ied"
    if _doubles_final_consonant(lemma):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def looks_past_inflected(token: str) -> bool:
    """Whether a surface verb token is plausibly a past or participle form."""
    token = token.lower()
    if token in IRREGULAR_PAST_FORMS or token in IRREGULAR_PARTICIPLES:
        return True
    if token in ("was", "were", "been", "did", "had"):
        return True
    if token in _ED_BASE_FORMS or token in IRREGULAR_VERBS:
        return False
    return token.endswith("ed") and len(token) >= 4


# --- subject number -------------------------------------------------------

PLURAL_PRONOUNS = frozenset(
    "they we you these those both many few several others".split()
)
SINGULAR_PRONOUNS = frozenset(
    """
    he she it this that one someone something anyone anything everyone
    everything everybody somebody nobody anybody each either neither
    """.split()
)
IRREGULAR_PLURAL_NOUNS = frozenset(
    """
    people men women children feet teeth mice geese oxen data media criteria
    phenomena police cattle
    """.split()
)
# Singular words whose final -s would otherwise trip the suffix heuristic.
_SINGULAR_S_WORDS = frozenset(
    """
    news lens summons politics economics mathematics physics athletics gas
    bias atlas chaos cosmos canvas
    """.split()
)

FIRST_SINGULAR = "first_singular"
SINGULAR = "singular"
PLURAL = "plural"


def agreement_class(head_word: str) -> str:
    """Classify a phrase head for subject-verb agreement.

    Uses a pronoun table, an irregular-plural table, and a plural-suffix
    heuristic; defaults to singular.
    """
    word = head_word.lower().strip(".,;:!?\"'")
    if word == "i":
        return FIRST_SINGULAR
    if word in PLURAL_PRONOUNS or word in IRREGULAR_PLURAL_NOUNS:
        return PLURAL
    if word in SINGULAR_PRONOUNS or word in _SINGULAR_S_WORDS:
        return SINGULAR
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) > 2:
        return PLURAL
    return SINGULAR
