"""Word forms, spelled-out numbers and worded dates for English and French.

All functions are pure; they work on resolved lexicon records plus feature
codes and never touch engine state.
"""

from .errors import OutOfRange

TENSES = ("p", "ps", "f")

# English auxiliaries/modals conjugate from their own cells; everything else
# builds its future as "will" + base form.
EN_AUX = {"be", "do", "will", "can", "must", "may", "shall"}

WEEKDAYS = {
    "en": ("Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"),
    "fr": ("lundi", "mardi", "mercredi", "jeudi", "vendredi", "samedi", "dimanche"),
}
MONTHS = {
    "en": ("January", "February", "March", "April", "May", "June", "July",
           "August", "September", "October", "November", "December"),
    "fr": ("janvier", "février", "mars", "avril", "mai", "juin", "juillet",
           "août", "septembre", "octobre", "novembre", "décembre"),
}

DATE_TOGGLES = ("year", "month", "date", "day", "hour", "minute", "second")


def inflect_noun(record, number, language):
    return record.form(number, language)


def inflect_adjective(record, gender, number, language):
    return record.form(f"{gender}{number}", language)


def conjugate(record, tense, person, number, language):
    """Finite forms as a token list.

    English future is "will" + base unless the entry pins its own future
    cells (modals); French is always a single token.
    """
    key = f"{tense}:{person}{number}"
    if language == "en" and tense == "f" and not record.has(key):
        return ["will", record.lemma]
    return [record.form(key, language)]


def participle(record, language):
    return record.form("pp", language)


def pronoun_for(gender, number, language):
    """Subject pronoun for resolved features; None gender is neuter in English."""
    if language == "fr":
        if number == "p":
            return "elles" if gender == "f" else "ils"
        return "elle" if gender == "f" else "il"
    if number == "p":
        return "they"
    if gender == "f":
        return "she"
    if gender == "m":
        return "he"
    return "it"


# ---------------------------------------------------------------- numbers

_EN_ONES = ("zero", "one", "two", "three", "four", "five", "six", "seven",
            "eight", "nine", "ten", "eleven", "twelve", "thirteen", "fourteen",
            "fifteen", "sixteen", "seventeen", "eighteen", "nineteen")
_EN_TENS = ("", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
            "eighty", "ninety")

_FR_UNITS = ("zéro", "un", "deux", "trois", "quatre", "cinq", "six", "sept",
             "huit", "neuf", "dix", "onze", "douze", "treize", "quatorze",
             "quinze", "seize")
_FR_TENS = {2: "vingt", 3: "trente", 4: "quarante", 5: "cinquante", 6: "soixante"}


def _en_under_100(n):
    if n < 20:
        return [_EN_ONES[n]]
    d, u = divmod(n, 10)
    return [_EN_TENS[d] + "-" + _EN_ONES[u]] if u else [_EN_TENS[d]]


def _en_under_1000(n):
    h, r = divmod(n, 100)
    toks = []
    if h:
        toks += [_EN_ONES[h], "hundred"]
    if r or not toks:
        toks += _en_under_100(r)
    return toks


def _fr_unit(n, gender):
    if n == 1 and gender == "f":
        return "une"
    return _FR_UNITS[n]


def _fr_under_100(n, gender, terminal):
    if n <= 16:
        return [_fr_unit(n, gender)]
    if n < 20:
        return ["dix-" + _FR_UNITS[n - 10]]
    d, u = divmod(n, 10)
    if d in (7, 9):
        base = 60 if d == 7 else 80
        rest = n - base
        if base == 60 and rest == 11:
            return ["soixante", "et", "onze"]
        sub = _fr_under_100(rest, "m", True)[0]
        return [("soixante-" if base == 60 else "quatre-vingt-") + sub]
    if d == 8:
        if u == 0:
            return ["quatre-vingts" if terminal else "quatre-vingt"]
        return ["quatre-vingt-" + _fr_unit(u, gender)]
    tens = _FR_TENS[d]
    if u == 0:
        return [tens]
    if u == 1:
        return [tens, "et", _fr_unit(1, gender)]
    return [tens + "-" + _FR_UNITS[u]]


def _fr_under_1000(n, gender, terminal):
    h, r = divmod(n, 100)
    toks = []
    if h == 1:
        toks.append("cent")
    elif h > 1:
        toks += _fr_under_100(h, "m", False)
        toks.append("cents" if r == 0 and terminal else "cent")
    if r or not toks:
        toks += _fr_under_100(r, gender, terminal)
    return toks


def number_to_words(value, gender="m", language="en"):
    """Cardinal spelling of 0..999999 as a token sequence."""
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 999999:
        raise OutOfRange(f"cannot spell out {value!r}")
    th, r = divmod(value, 1000)
    if language == "fr":
        toks = []
        if th == 1:
            toks.append("mille")
        elif th > 1:
            toks += _fr_under_1000(th, "m", False)
            toks.append("mille")
        if r or not toks:
            toks += _fr_under_1000(r, gender, True)
        return toks
    toks = []
    if th:
        toks += _en_under_1000(th) + ["thousand"]
    if r or not toks:
        toks += _en_under_1000(r)
    return toks


# ------------------------------------------------------------------ dates

def normalize_date_options(options=None):
    out = {key: True for key in DATE_TOGGLES}
    if options:
        out.update(options)
    return out


def format_date(when, options, language):
    """Worded date-time as a token sequence; disabled toggles drop segments."""
    o = normalize_date_options(options)
    toks = []
    if language == "fr":
        date_part = []
        if o["day"]:
            date_part.append(WEEKDAYS["fr"][when.weekday()])
        if o["date"]:
            date_part.append(str(when.day))
        if o["month"]:
            date_part.append(MONTHS["fr"][when.month - 1])
        if o["year"]:
            date_part.append(str(when.year))
        if date_part:
            toks += ["le"] + date_part
        if o["hour"]:
            toks += ["à", str(when.hour), "h"]
            if o["minute"]:
                toks.append(str(when.minute))
                if o["second"]:
                    toks += ["min", str(when.second), "s"]
        return toks
    groups = []
    if o["day"]:
        groups.append([WEEKDAYS["en"][when.weekday()]])
    month_day = []
    if o["month"]:
        month_day.append(MONTHS["en"][when.month - 1])
    if o["date"]:
        month_day.append(str(when.day))
    if month_day:
        groups.append(month_day)
    if o["year"]:
        groups.append([str(when.year)])
    if groups:
        toks.append("on")
        for i, group in enumerate(groups):
            if i:
                toks.append(",")
            toks += group
    if o["hour"]:
        h12 = when.hour % 12 or 12
        hour_tok = f"{h12}:{when.minute:02d}" if o["minute"] else str(h12)
        toks += ["at", hour_tok, "a.m." if when.hour < 12 else "p.m."]
    return toks
