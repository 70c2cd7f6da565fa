#!/usr/bin/env python3
"""Regenerate the bundled fixtures: the got-mini snapshot, the 20x5
conversation benchmark and the planted supervision conversations.

The data is authored so that every benchmark turn has at least one answering
evidence reachable through the turn's annotated entities, which the
acceptance suite then verifies end to end.
"""

from __future__ import annotations

import json
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "fixtures"
SNAPSHOT = OUT / "got-mini"

WD = "https://www.wikidata.org/wiki/"


def entity(eid, label, aliases=(), types=(), page_id=None):
    record = {
        "id": eid,
        "label": label,
        "aliases": list(aliases),
        "types": [{"label": t, "freq": f} for t, f in types],
    }
    if page_id:
        record["page_id"] = page_id
    return record


def fact(fid, subject, predicate, obj, qualifiers=()):
    def enc(o):
        return {"entity": o} if str(o).startswith("Q") else {"literal": str(o)}

    return {
        "fact_id": fid,
        "subject": subject,
        "predicate": predicate,
        "object": enc(obj),
        "qualifiers": [{"predicate": p, "object": enc(o)} for p, o in qualifiers],
    }


def page(page_id, title, eid, sentences, anchors=(), table=None, infobox=()):
    record = {
        "page_id": page_id,
        "title": title,
        "entity": eid,
        "sentences": list(sentences),
        "tables": [table] if table else [],
        "infobox": [{"attribute": a, "lines": list(lines)} for a, lines in infobox],
        "anchors": [{"surface": s, "target": t} for s, t in anchors],
    }
    return record


def table(headers, rows, caption=None):
    record = {"headers": list(headers), "rows": [list(r) for r in rows]}
    if caption:
        record["caption"] = caption
    return record


def turn(question, answers, completed=None, paraphrase=None, entities=(), sources=()):
    return {
        "question": question,
        "answers": [
            {"label": label, **({"wikidata_url": WD + qid} if qid else {})}
            for label, qid in answers
        ],
        **({"completed": completed} if completed else {}),
        **({"paraphrase": paraphrase} if paraphrase else {}),
        "entities": list(entities),
        "sources": list(sources),
    }


ENTITIES = [
    # --- TV series ---
    entity("Q101", "Game of Thrones", ["GoT"], [("television series", 120)], "p-got"),
    entity("Q102", "Jaime Lannister", ["Jaime"], [("fictional human", 80), ("GoT character", 12)]),
    entity("Q103", "Tyrion Lannister", ["Tyrion", "the dwarf"],
           [("fictional human", 90), ("GoT character", 15)], "p-tyrion"),
    entity("Q104", "Nikolaj Coster-Waldau", [], [("human", 70)]),
    entity("Q105", "Peter Dinklage", [], [("human", 85)]),
    entity("Q106", "Fantasy", [], [("genre", 25)]),
    entity("Q111", "The Walking Dead", ["TWD"], [("television series", 110)], "p-twd"),
    entity("Q112", "Rick Grimes", [], [("fictional human", 60)]),
    entity("Q113", "Daryl Dixon", [], [("fictional human", 55)]),
    entity("Q114", "Andrew Lincoln", [], [("human", 65)]),
    entity("Q115", "Norman Reedus", [], [("human", 60)]),
    entity("Q116", "Hollywood, Florida", ["Hollywood Florida"], [("location", 40), ("city", 20)]),
    entity("Q121", "Breaking Bad", [], [("television series", 115)], "p-bb"),
    entity("Q122", "Walter White", [], [("fictional human", 70)]),
    entity("Q123", "Bryan Cranston", [], [("human", 75)]),
    entity("Q124", "AMC", [], [("network", 30)]),
    entity("Q125", "Jesse Pinkman", [], [("fictional human", 45)]),
    entity("Q126", "Aaron Paul", [], [("human", 50)]),
    entity("Q131", "Friends", [], [("television series", 105)], "p-friends"),
    entity("Q132", "Rachel Green", [], [("fictional human", 50)]),
    entity("Q133", "Jennifer Aniston", [], [("human", 80)]),
    entity("Q134", "NBC", [], [("network", 45)]),
    entity("Q135", "Sherman Oaks", [], [("location", 25), ("neighborhood", 10)]),
    entity("Q136", "Ross Geller", [], [("fictional human", 48)]),
    entity("Q137", "David Schwimmer", [], [("human", 58)]),
    # --- Movies ---
    entity("Q201", "Harry Potter film series",
           ["Harry Potter", "Harry Potter movies", "the Harry Potter films"],
           [("film series", 100)], "p-hp"),
    entity("Q202", "Ron Weasley", ["Ron"], [("fictional human", 55)]),
    entity("Q203", "Rupert Grint", [], [("human", 60)]),
    entity("Q204", "Albus Dumbledore", ["Dumbledore"], [("fictional human", 65)]),
    entity("Q205", "Richard Harris", [], [("human", 50)]),
    entity("Q206", "Michael Gambon", [], [("human", 52)]),
    entity("Q211", "The Matrix", [], [("film", 95)], "p-matrix"),
    entity("Q212", "Neo", [], [("fictional human", 45)]),
    entity("Q213", "Keanu Reeves", [], [("human", 85)]),
    entity("Q214", "Beirut", [], [("location", 35), ("city", 30)]),
    entity("Q215", "The Wachowskis", ["Wachowskis"], [("human", 40)]),
    entity("Q216", "Trinity", [], [("fictional human", 35)]),
    entity("Q217", "Carrie-Anne Moss", [], [("human", 45)]),
    entity("Q221", "Inception", [], [("film", 90)], "p-inception"),
    entity("Q222", "Cobb", ["Dom Cobb"], [("fictional human", 30)]),
    entity("Q223", "Leonardo DiCaprio", [], [("human", 90)]),
    entity("Q224", "Los Angeles", [], [("location", 60), ("city", 55)]),
    entity("Q225", "Christopher Nolan", ["Nolan"], [("human", 70)]),
    entity("Q231", "Titanic", [], [("film", 92)], "p-titanic"),
    entity("Q232", "Rose DeWitt Bukater", ["Rose"], [("fictional human", 28)]),
    entity("Q233", "Kate Winslet", [], [("human", 72)]),
    entity("Q234", "James Cameron", [], [("human", 68)]),
    # --- Books ---
    entity("Q301", "Slaughterhouse-Five", ["Slaughterhouse Five"], [("book", 60)], "p-s5"),
    entity("Q302", "Kurt Vonnegut", [], [("human", 58)]),
    entity("Q303", "World War II", ["Second World War"], [("war", 50)]),
    entity("Q304", "New York City", ["New York"], [("location", 70), ("city", 65)]),
    entity("Q311", "Nineteen Eighty-Four", ["1984"], [("book", 62)], "p-1984"),
    entity("Q312", "George Orwell", ["Orwell"], [("human", 66)]),
    entity("Q313", "Motihari", [], [("location", 15), ("town", 8)]),
    entity("Q314", "Dystopian fiction", ["dystopia"], [("genre", 30)]),
    entity("Q315", "Winston Smith", [], [("fictional human", 30)]),
    entity("Q316", "Big Brother", [], [("fictional human", 22)]),
    entity("Q321", "Dune", [], [("book", 64)], "p-dune"),
    entity("Q322", "Frank Herbert", [], [("human", 54)]),
    entity("Q323", "Arrakis", [], [("planet", 20)]),
    entity("Q324", "Denis Villeneuve", [], [("human", 56)]),
    entity("Q325", "Paul Atreides", [], [("fictional human", 26)]),
    entity("Q326", "Timothée Chalamet", [], [("human", 62)]),
    entity("Q331", "The Hobbit", [], [("book", 61)], "p-hobbit"),
    entity("Q332", "J. R. R. Tolkien", ["Tolkien"], [("human", 77)]),
    entity("Q333", "Bournemouth", [], [("location", 22), ("town", 12)]),
    entity("Q334", "Bilbo Baggins", ["Bilbo"], [("fictional human", 40)]),
    entity("Q335", "Martin Freeman", [], [("human", 58)]),
    # --- Music ---
    entity("Q401", "The Beatles", ["Beatles"], [("band", 88)], "p-beatles"),
    entity("Q402", "Let It Be", [], [("album", 35)]),
    entity("Q403", "Candlestick Park", [], [("location", 28), ("stadium", 18)]),
    entity("Q404", "Brian Epstein", [], [("human", 42)]),
    entity("Q411", "Queen", [], [("band", 86)], "p-queen"),
    entity("Q412", "Freddie Mercury", [], [("human", 84)]),
    entity("Q413", "Zanzibar", [], [("location", 26), ("island", 14)]),
    entity("Q414", "London", [], [("location", 65), ("city", 63)]),
    entity("Q421", "ABBA", [], [("band", 80)], "p-abba"),
    entity("Q422", "Sweden", [], [("country", 75)]),
    entity("Q423", "Waterloo", [], [("song", 24)]),
    entity("Q431", "Nirvana", [], [("band", 82)], "p-nirvana"),
    entity("Q432", "Kurt Cobain", [], [("human", 78)]),
    entity("Q433", "Aberdeen", [], [("location", 20), ("city", 16)]),
    entity("Q434", "Dave Grohl", [], [("human", 64)]),
    # --- Soccer ---
    entity("Q501", "Kylian Mbappé", ["Mbappé", "Kylian Mbappe", "Mbappe"],
           [("human", 90), ("footballer", 30)], "p-mbappe"),
    entity("Q502", "France national football team", ["France football team"],
           [("national association football team", 44)]),
    entity("Q503", "Paris", [], [("location", 72), ("city", 70)]),
    entity("Q504", "Paris Saint-Germain", ["PSG"], [("club", 46), ("football club", 20)]),
    entity("Q505", "Golden Boy", [], [("award", 18)]),
    entity("Q511", "Lionel Messi", ["Messi"], [("human", 95), ("footballer", 35)], "p-messi"),
    entity("Q512", "Argentina", [], [("country", 68)]),
    entity("Q513", "Inter Miami", [], [("club", 30), ("football club", 12)]),
    entity("Q514", "Miami", [], [("location", 48), ("city", 44)]),
    entity("Q515", "Rosario", [], [("location", 18), ("city", 12)]),
    entity("Q521", "Cristiano Ronaldo", ["Ronaldo"], [("human", 94), ("footballer", 34)],
           "p-ronaldo"),
    entity("Q522", "Portugal", [], [("country", 66)]),
    entity("Q523", "Real Madrid", [], [("club", 58), ("football club", 25)]),
    entity("Q524", "Madrid", [], [("location", 62), ("city", 58)]),
    entity("Q525", "Funchal", [], [("location", 20), ("city", 14)]),
    entity("Q531", "Zinedine Zidane", ["Zidane"], [("human", 88), ("footballer", 30)],
           "p-zidane"),
    entity("Q532", "France", [], [("country", 74)]),
    entity("Q533", "Marseille", [], [("location", 40), ("city", 36)]),
]

FACTS = [
    # Game of Thrones
    fact("f-got-1", "Q101", "cast member", "Q104", [("character role", "Q102")]),
    fact("f-got-2", "Q101", "cast member", "Q105", [("character role", "Q103")]),
    fact("f-got-3", "Q101", "genre", "Q106"),
    fact("f-pd-1", "Q105", "born on", "11 June 1969"),
    # The Walking Dead
    fact("f-twd-1", "Q111", "cast member", "Q114", [("character role", "Q112")]),
    fact("f-twd-2", "Q111", "cast member", "Q115", [("character role", "Q113")]),
    fact("f-nr-1", "Q115", "born on", "6 January 1969"),
    fact("f-nr-2", "Q115", "born in", "Q116"),
    # Breaking Bad
    fact("f-bb-1", "Q121", "cast member", "Q123", [("character role", "Q122")]),
    fact("f-bb-2", "Q121", "original network", "Q124"),
    fact("f-bb-3", "Q121", "cast member", "Q126", [("character role", "Q125")]),
    fact("f-bc-1", "Q123", "born on", "7 March 1956"),
    # Friends
    fact("f-fr-1", "Q131", "cast member", "Q133", [("character role", "Q132")]),
    fact("f-fr-2", "Q131", "original network", "Q134"),
    fact("f-fr-3", "Q131", "cast member", "Q137", [("character role", "Q136")]),
    fact("f-ja-1", "Q133", "born in", "Q135"),
    # Harry Potter
    fact("f-hp-1", "Q201", "cast member", "Q203", [("character role", "Q202")]),
    fact("f-hp-2", "Q201", "cast member", "Q205", [("character role", "Q204")]),
    fact("f-hp-3", "Q201", "cast member", "Q206", [("character role", "Q204")]),
    fact("f-rg-1", "Q203", "born on", "24 August 1988"),
    # The Matrix
    fact("f-mx-1", "Q211", "cast member", "Q213", [("character role", "Q212")]),
    fact("f-mx-2", "Q211", "directed by", "Q215"),
    fact("f-mx-3", "Q211", "cast member", "Q217", [("character role", "Q216")]),
    fact("f-kr-1", "Q213", "born on", "2 September 1964"),
    fact("f-kr-2", "Q213", "born in", "Q214"),
    # Inception
    fact("f-in-1", "Q221", "cast member", "Q223", [("character role", "Q222")]),
    fact("f-in-2", "Q221", "directed by", "Q225"),
    fact("f-ld-1", "Q223", "born in", "Q224"),
    # Titanic
    fact("f-ti-1", "Q231", "cast member", "Q233", [("character role", "Q232")]),
    fact("f-ti-2", "Q231", "directed by", "Q234"),
    fact("f-kw-1", "Q233", "born on", "5 October 1975"),
    # Slaughterhouse-Five
    fact("f-s5-1", "Q301", "written by", "Q302"),
    fact("f-s5-2", "Q301", "main subject", "Q303"),
    fact("f-kv-1", "Q302", "born on", "11 November 1922"),
    fact("f-kv-2", "Q302", "died in", "Q304"),
    # Nineteen Eighty-Four
    fact("f-84-1", "Q311", "written by", "Q312"),
    fact("f-84-2", "Q311", "genre", "Q314"),
    fact("f-84-3", "Q311", "protagonist", "Q315"),
    fact("f-go-1", "Q312", "born on", "25 June 1903"),
    fact("f-go-2", "Q312", "born in", "Q313"),
    # Dune
    fact("f-du-1", "Q321", "written by", "Q322"),
    fact("f-du-2", "Q321", "set on", "Q323"),
    fact("f-du-3", "Q321", "cast member", "Q326", [("character role", "Q325")]),
    fact("f-fh-1", "Q322", "born on", "8 October 1920"),
    # The Hobbit
    fact("f-ho-1", "Q331", "written by", "Q332"),
    fact("f-ho-2", "Q331", "cast member", "Q335", [("character role", "Q334")]),
    fact("f-jt-1", "Q332", "born on", "3 January 1892"),
    fact("f-jt-2", "Q332", "died in", "Q333"),
    # The Beatles
    fact("f-be-1", "Q401", "last recorded album", "Q402"),
    fact("f-be-2", "Q401", "manager", "Q404"),
    fact("f-be-3", "Q401", "break up year", "1970"),
    # Queen
    fact("f-qu-1", "Q411", "lead singer", "Q412"),
    fact("f-qu-2", "Q411", "formed in", "Q414"),
    fact("f-fm-1", "Q412", "born on", "5 September 1946"),
    fact("f-fm-2", "Q412", "born in", "Q413"),
    # ABBA
    fact("f-ab-1", "Q421", "country of origin", "Q422"),
    fact("f-ab-2", "Q421", "Eurovision win year", "1974"),
    fact("f-ab-3", "Q421", "Eurovision winning song", "Q423"),
    fact("f-ab-4", "Q421", "split up year", "1982"),
    # Nirvana
    fact("f-ni-1", "Q431", "lead singer", "Q432"),
    fact("f-ni-2", "Q431", "formed in", "Q433"),
    fact("f-ni-3", "Q431", "drummer", "Q434"),
    fact("f-kc-1", "Q432", "born on", "20 February 1967"),
    # Soccer
    fact("f-mb-1", "Q501", "plays for national team", "Q502"),
    fact("f-mb-2", "Q501", "place of birth", "Q503"),
    fact("f-mb-3", "Q501", "plays for club", "Q504"),
    fact("f-mb-4", "Q501", "award received", "Q505", [("point in time", "2017")]),
    fact("f-me-1", "Q511", "plays for club", "Q513"),
    fact("f-me-2", "Q511", "born on", "24 June 1987"),
    fact("f-me-3", "Q511", "place of birth", "Q515"),
    fact("f-im-1", "Q513", "based in", "Q514"),
    fact("f-ro-1", "Q521", "nationality", "Q522"),
    fact("f-ro-2", "Q521", "played for club", "Q523", [("point in time", "2010")]),
    fact("f-ro-3", "Q521", "born on", "5 February 1985"),
    fact("f-rm-1", "Q523", "based in", "Q524"),
    fact("f-zi-1", "Q531", "played for country", "Q532"),
    fact("f-zi-2", "Q531", "coached club", "Q523"),
    fact("f-zi-3", "Q531", "born on", "23 June 1972"),
    fact("f-zi-4", "Q531", "born in", "Q533"),
]

PAGES = [
    page(
        "p-got", "Game of Thrones", "Q101",
        [
            "Game of Thrones is an American fantasy drama television series created "
            "by David Benioff and D. B. Weiss.",
            "The third and youngest Lannister sibling is the dwarf Tyrion (Peter Dinklage).",
            "Nikolaj Coster-Waldau portrayed Jaime Lannister throughout the series.",
        ],
        anchors=[
            ("Tyrion", "Tyrion Lannister"),
            ("Peter Dinklage", "Peter Dinklage"),
            ("Nikolaj Coster-Waldau", "Nikolaj Coster-Waldau"),
            ("Jaime Lannister", "Jaime Lannister"),
        ],
        table=table(["Season", "First aired"],
                    [["Season 1", "April 17, 2011"], ["Season 2", "April 1, 2012"]],
                    caption="Seasons"),
        infobox=[
            ("Genre", ["Fantasy drama"]),
            ("Running time", ["50–82 minutes"]),
            ("No. of episodes", ["73"]),
        ],
    ),
    page(
        "p-tyrion", "Tyrion Lannister", "Q103",
        ["Tyrion Lannister, often called the dwarf of Casterly Rock, is played by "
         "Peter Dinklage."],
        anchors=[("Peter Dinklage", "Peter Dinklage")],
    ),
    page(
        "p-twd", "The Walking Dead", "Q111",
        [
            "The Walking Dead is an American post-apocalyptic horror television series.",
            "Andrew Lincoln starred as Rick Grimes, a sheriff's deputy who wakes from a coma.",
            "Norman Reedus plays the crossbow-wielding survivor Daryl Dixon.",
        ],
        anchors=[
            ("Andrew Lincoln", "Andrew Lincoln"),
            ("Rick Grimes", "Rick Grimes"),
            ("Norman Reedus", "Norman Reedus"),
            ("Daryl Dixon", "Daryl Dixon"),
        ],
        table=table(["Season", "First aired"],
                    [["Season 1", "October 31, 2010"], ["Season 2", "October 16, 2011"]],
                    caption="Seasons"),
        infobox=[("Seasons", ["11"]), ("Original network", ["AMC"])],
    ),
    page(
        "p-bb", "Breaking Bad", "Q121",
        [
            "Breaking Bad is an American crime drama created by Vince Gilligan.",
            "Bryan Cranston starred as the chemistry teacher Walter White.",
            "Aaron Paul played Jesse Pinkman, White's former student and partner.",
        ],
        anchors=[
            ("Bryan Cranston", "Bryan Cranston"),
            ("Walter White", "Walter White"),
            ("Aaron Paul", "Aaron Paul"),
            ("Jesse Pinkman", "Jesse Pinkman"),
            ("AMC", "AMC"),
        ],
        table=table(["Season", "Premiere year"],
                    [["Season 1", "2008"], ["Season 2", "2009"]],
                    caption="Seasons"),
        infobox=[("Original network", ["AMC"]), ("No. of episodes", ["62"])],
    ),
    page(
        "p-friends", "Friends", "Q131",
        [
            "Friends is an American television sitcom created by David Crane and "
            "Marta Kauffman.",
            "Jennifer Aniston played Rachel Green across all ten seasons.",
            "David Schwimmer appeared as the palaeontologist Ross Geller.",
        ],
        anchors=[
            ("Jennifer Aniston", "Jennifer Aniston"),
            ("Rachel Green", "Rachel Green"),
            ("David Schwimmer", "David Schwimmer"),
            ("Ross Geller", "Ross Geller"),
            ("NBC", "NBC"),
        ],
        table=table(["Season", "First aired"],
                    [["Season 1", "September 22, 1994"], ["Season 2", "September 21, 1995"]],
                    caption="Seasons"),
        infobox=[("Original network", ["NBC"]), ("No. of episodes", ["236"])],
    ),
    page(
        "p-hp", "Harry Potter film series", "Q201",
        [
            "The Harry Potter film series is based on the novels by J. K. Rowling.",
            "Rupert Grint appeared as Ron Weasley throughout the series.",
            "Richard Harris played Albus Dumbledore in the first two films, with "
            "Michael Gambon taking over the role.",
        ],
        anchors=[
            ("Rupert Grint", "Rupert Grint"),
            ("Ron Weasley", "Ron Weasley"),
            ("Richard Harris", "Richard Harris"),
            ("Michael Gambon", "Michael Gambon"),
            ("Albus Dumbledore", "Albus Dumbledore"),
        ],
        table=table(["Film", "Released"],
                    [["Harry Potter and the Philosopher's Stone", "2001"],
                     ["Harry Potter and the Chamber of Secrets", "2002"]],
                    caption="Films"),
        infobox=[("Running time", ["1,179 minutes"]), ("Films", ["8"])],
    ),
    page(
        "p-matrix", "The Matrix", "Q211",
        [
            "The Matrix is a science fiction action film written and directed by "
            "the Wachowskis.",
            "Keanu Reeves stars as Neo, a computer programmer drawn into a rebellion.",
            "Carrie-Anne Moss plays the hacker Trinity.",
        ],
        anchors=[
            ("the Wachowskis", "The Wachowskis"),
            ("Keanu Reeves", "Keanu Reeves"),
            ("Neo", "Neo"),
            ("Carrie-Anne Moss", "Carrie-Anne Moss"),
            ("Trinity", "Trinity"),
        ],
        table=table(["Film", "Released"],
                    [["The Matrix", "1999"], ["The Matrix Reloaded", "2003"]],
                    caption="Series"),
        infobox=[("Running time", ["136 minutes"])],
    ),
    page(
        "p-inception", "Inception", "Q221",
        [
            "Inception is a 2010 science fiction heist film written and directed by "
            "Christopher Nolan.",
            "Leonardo DiCaprio plays Cobb, a thief who steals secrets through dreams.",
        ],
        anchors=[
            ("Christopher Nolan", "Christopher Nolan"),
            ("Leonardo DiCaprio", "Leonardo DiCaprio"),
            ("Cobb", "Cobb"),
        ],
        infobox=[("Release year", ["2010"]), ("Running time", ["148 minutes"])],
    ),
    page(
        "p-titanic", "Titanic", "Q231",
        [
            "Titanic is a 1997 epic romance film directed by James Cameron.",
            "Kate Winslet starred as Rose alongside Leonardo DiCaprio.",
        ],
        anchors=[
            ("James Cameron", "James Cameron"),
            ("Kate Winslet", "Kate Winslet"),
            ("Rose", "Rose DeWitt Bukater"),
            ("Leonardo DiCaprio", "Leonardo DiCaprio"),
        ],
        infobox=[("Academy Awards", ["11"]), ("Release year", ["1997"])],
    ),
    page(
        "p-s5", "Slaughterhouse-Five", "Q301",
        [
            "Slaughterhouse-Five is an anti-war novel by Kurt Vonnegut about the "
            "firebombing of Dresden in World War II.",
            "The novel follows Billy Pilgrim, a soldier who becomes unstuck in time.",
        ],
        anchors=[
            ("Kurt Vonnegut", "Kurt Vonnegut"),
            ("World War II", "World War II"),
        ],
        infobox=[("Published", ["1969"]), ("Pages", ["215"])],
    ),
    page(
        "p-1984", "Nineteen Eighty-Four", "Q311",
        [
            "Nineteen Eighty-Four is a dystopian novel by George Orwell published in 1949.",
            "The story follows Winston Smith under the rule of Big Brother.",
        ],
        anchors=[
            ("George Orwell", "George Orwell"),
            ("Winston Smith", "Winston Smith"),
            ("Big Brother", "Big Brother"),
        ],
        infobox=[("Published", ["1949"])],
    ),
    page(
        "p-dune", "Dune", "Q321",
        [
            "Dune is a science fiction novel by Frank Herbert set on the desert "
            "planet Arrakis.",
            "Timothée Chalamet played Paul Atreides in the 2021 film adaptation.",
        ],
        anchors=[
            ("Frank Herbert", "Frank Herbert"),
            ("Arrakis", "Arrakis"),
            ("Timothée Chalamet", "Timothée Chalamet"),
            ("Paul Atreides", "Paul Atreides"),
        ],
        infobox=[("Published", ["August 1, 1965"]), ("Pages", ["412"])],
    ),
    page(
        "p-hobbit", "The Hobbit", "Q331",
        [
            "The Hobbit is a children's fantasy novel by J. R. R. Tolkien.",
            "Martin Freeman played Bilbo Baggins in the film adaptation.",
        ],
        anchors=[
            ("J. R. R. Tolkien", "J. R. R. Tolkien"),
            ("Martin Freeman", "Martin Freeman"),
            ("Bilbo Baggins", "Bilbo Baggins"),
        ],
        infobox=[("Published", ["1937"]), ("Pages", ["310"])],
    ),
    page(
        "p-beatles", "The Beatles", "Q401",
        [
            "The Beatles were an English rock band formed in Liverpool in 1960.",
            "The Beatles played their last paying concert at Candlestick Park in 1966.",
            "The Beatles were affectionately known as the Fab Four.",
        ],
        anchors=[
            ("Candlestick Park", "Candlestick Park"),
            ("Fab Four", "The Beatles"),
            ("Let It Be", "Let It Be"),
        ],
        table=table(["Album", "Released"],
                    [["Let It Be", "1970"], ["Abbey Road", "1969"]],
                    caption="Selected albums"),
        infobox=[("Years active", ["1960–1970"]), ("Origin", ["Liverpool, England"])],
    ),
    page(
        "p-queen", "Queen", "Q411",
        [
            "Queen are a British rock band formed in London in 1970.",
            "Freddie Mercury fronted the band until his death.",
        ],
        anchors=[("Freddie Mercury", "Freddie Mercury"), ("London", "London")],
        table=table(["Song", "Released"],
                    [["Bohemian Rhapsody", "1975"], ["We Will Rock You", "1977"]],
                    caption="Singles"),
        infobox=[("Studio albums", ["15"])],
    ),
    page(
        "p-abba", "ABBA", "Q421",
        [
            "ABBA are a Swedish pop group formed in Stockholm in 1972.",
            "ABBA won the Eurovision Song Contest in 1974 with the song Waterloo.",
        ],
        anchors=[("Waterloo", "Waterloo"), ("Sweden", "Sweden")],
        infobox=[("Studio albums", ["8"]), ("Origin", ["Stockholm, Sweden"])],
    ),
    page(
        "p-nirvana", "Nirvana", "Q431",
        [
            "Nirvana was an American rock band formed by Kurt Cobain and Krist Novoselic.",
            "Dave Grohl joined Nirvana as its drummer in 1990.",
        ],
        anchors=[("Kurt Cobain", "Kurt Cobain"), ("Dave Grohl", "Dave Grohl")],
        table=table(["Album", "Released"],
                    [["Bleach", "1989"], ["Nevermind", "1991"]],
                    caption="Albums"),
        infobox=[("Studio albums", ["3"])],
    ),
    page(
        "p-mbappe", "Kylian Mbappé", "Q501",
        [
            "Kylian Mbappé is a French professional footballer born in Paris.",
            "Mbappé won the Golden Boy award in 2017.",
        ],
        anchors=[("Paris", "Paris"), ("Golden Boy", "Golden Boy")],
        table=table(["Year", "Goals for France"],
                    [["2018", "9"], ["2019", "6"]],
                    caption="International goals"),
        infobox=[("Position", ["Forward"])],
    ),
    page(
        "p-messi", "Lionel Messi", "Q511",
        [
            "Lionel Messi is an Argentine professional footballer born in Rosario.",
            "Messi joined Inter Miami in 2023.",
        ],
        anchors=[("Rosario", "Rosario"), ("Inter Miami", "Inter Miami")],
        infobox=[("Ballon d'Or awards", ["8"])],
    ),
    page(
        "p-ronaldo", "Cristiano Ronaldo", "Q521",
        [
            "Cristiano Ronaldo is a Portuguese professional footballer born in Funchal.",
            "Ronaldo played for Real Madrid between 2009 and 2018.",
        ],
        anchors=[("Funchal", "Funchal"), ("Real Madrid", "Real Madrid")],
        table=table(["Year", "Goals"],
                    [["2014", "61"], ["2015", "57"]],
                    caption="Goals by year"),
        infobox=[("Position", ["Forward"])],
    ),
    page(
        "p-zidane", "Zinedine Zidane", "Q531",
        [
            "Zinedine Zidane is a French former footballer born in Marseille.",
            "Zidane won the World Cup with France in 1998.",
        ],
        anchors=[("Marseille", "Marseille"), ("France", "France")],
        infobox=[("World Cups won", ["1"])],
    ),
]

LINKS = {
    "Tyrion Lannister": "Q103", "Peter Dinklage": "Q105",
    "Nikolaj Coster-Waldau": "Q104", "Jaime Lannister": "Q102",
    "Andrew Lincoln": "Q114", "Rick Grimes": "Q112",
    "Norman Reedus": "Q115", "Daryl Dixon": "Q113",
    "Bryan Cranston": "Q123", "Walter White": "Q122",
    "Aaron Paul": "Q126", "Jesse Pinkman": "Q125", "AMC": "Q124",
    "Jennifer Aniston": "Q133", "Rachel Green": "Q132",
    "David Schwimmer": "Q137", "Ross Geller": "Q136", "NBC": "Q134",
    "Rupert Grint": "Q203", "Ron Weasley": "Q202",
    "Richard Harris": "Q205", "Michael Gambon": "Q206", "Albus Dumbledore": "Q204",
    "The Wachowskis": "Q215", "Keanu Reeves": "Q213", "Neo": "Q212",
    "Carrie-Anne Moss": "Q217", "Trinity": "Q216",
    "Christopher Nolan": "Q225", "Leonardo DiCaprio": "Q223", "Cobb": "Q222",
    "James Cameron": "Q234", "Kate Winslet": "Q233", "Rose DeWitt Bukater": "Q232",
    "Kurt Vonnegut": "Q302", "World War II": "Q303",
    "George Orwell": "Q312", "Winston Smith": "Q315", "Big Brother": "Q316",
    "Frank Herbert": "Q322", "Arrakis": "Q323",
    "Timothée Chalamet": "Q326", "Paul Atreides": "Q325",
    "J. R. R. Tolkien": "Q332", "Martin Freeman": "Q335", "Bilbo Baggins": "Q334",
    "Candlestick Park": "Q403", "The Beatles": "Q401", "Let It Be": "Q402",
    "Freddie Mercury": "Q412", "London": "Q414",
    "Waterloo": "Q423", "Sweden": "Q422",
    "Kurt Cobain": "Q432", "Dave Grohl": "Q434",
    "Paris": "Q503", "Golden Boy": "Q505",
    "Rosario": "Q515", "Inter Miami": "Q513",
    "Funchal": "Q525", "Real Madrid": "Q523",
    "Marseille": "Q533", "France": "Q532",
}

CONVERSATIONS = [
    # --- TV series ---
    {
        "conv_id": "tv-got", "domain": "TV series",
        "turns": [
            turn("Who played Jaime Lannister in GoT?",
                 [("Nikolaj Coster-Waldau", "Q104")],
                 entities=["Q101", "Q102"], sources=["kb", "text"]),
            turn("What about the dwarf?",
                 [("Peter Dinklage", "Q105")],
                 completed="Who played the dwarf Tyrion Lannister in GoT?",
                 paraphrase="Who acted the dwarf?",
                 entities=["Q101", "Q103"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("11 June 1969", None)],
                 completed="When was Peter Dinklage born?",
                 entities=["Q105"], sources=["kb"]),
            turn("Release date of first season?",
                 [("April 17, 2011", None)],
                 completed="What is the release date of the first season of GoT?",
                 entities=["Q101"], sources=["table"]),
            turn("Duration of an episode?",
                 [("50–82 minutes", None)],
                 completed="What is the duration of an episode of GoT?",
                 entities=["Q101"], sources=["info"]),
        ],
    },
    {
        "conv_id": "tv-twd", "domain": "TV series",
        "turns": [
            turn("Who is the actor of Rick Grimes in The Walking Dead?",
                 [("Andrew Lincoln", "Q114")],
                 entities=["Q111", "Q112"], sources=["kb", "text"]),
            turn("What about Daryl Dixon?",
                 [("Norman Reedus", "Q115")],
                 completed="Who is the actor of Daryl Dixon in The Walking Dead?",
                 entities=["Q111", "Q113"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("6 January 1969", None)],
                 completed="When was Norman Reedus born?",
                 entities=["Q115"], sources=["kb"]),
            turn("Where was he born?",
                 [("Hollywood, Florida", "Q116")],
                 completed="Where was Norman Reedus born?",
                 entities=["Q115"], sources=["kb"]),
            turn("How many seasons does The Walking Dead have?",
                 [("11", None)],
                 entities=["Q111"], sources=["info"]),
        ],
    },
    {
        "conv_id": "tv-bb", "domain": "TV series",
        "turns": [
            turn("Who played Walter White in Breaking Bad?",
                 [("Bryan Cranston", "Q123")],
                 entities=["Q121", "Q122"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("7 March 1956", None)],
                 completed="When was Bryan Cranston born?",
                 entities=["Q123"], sources=["kb"]),
            turn("Which network did Breaking Bad air on?",
                 [("AMC", "Q124")],
                 entities=["Q121"], sources=["kb", "info"]),
            turn("What year did Breaking Bad premiere?",
                 [("2008", None)],
                 entities=["Q121"], sources=["table"]),
            turn("How many episodes are there?",
                 [("62", None)],
                 completed="How many episodes does Breaking Bad have?",
                 entities=["Q121"], sources=["info"]),
        ],
    },
    {
        "conv_id": "tv-friends", "domain": "TV series",
        "turns": [
            turn("Who played Rachel Green in Friends?",
                 [("Jennifer Aniston", "Q133")],
                 entities=["Q131", "Q132"], sources=["kb", "text"]),
            turn("Where was she born?",
                 [("Sherman Oaks", "Q135")],
                 completed="Where was Jennifer Aniston born?",
                 entities=["Q133"], sources=["kb"]),
            turn("Which network did Friends air on?",
                 [("NBC", "Q134")],
                 entities=["Q131"], sources=["kb", "info"]),
            turn("When did Friends first premiere?",
                 [("September 22, 1994", None)],
                 entities=["Q131"], sources=["table"]),
            turn("How many episodes does Friends have?",
                 [("236", None)],
                 entities=["Q131"], sources=["info"]),
        ],
    },
    # --- Movies ---
    {
        "conv_id": "mov-hp", "domain": "Movies",
        "turns": [
            turn("Who played Ron in the Harry Potter movies?",
                 [("Rupert Grint", "Q203")],
                 entities=["Q201", "Q202"], sources=["kb", "text"]),
            turn("Who played Dumbledore?",
                 [("Richard Harris", "Q205"), ("Michael Gambon", "Q206")],
                 completed="Who played Dumbledore in the Harry Potter movies?",
                 entities=["Q201", "Q204"], sources=["kb", "text"]),
            turn("When was Rupert Grint born?",
                 [("24 August 1988", None)],
                 entities=["Q203"], sources=["kb"]),
            turn("What year was the first Harry Potter movie released?",
                 [("2001", None)],
                 entities=["Q201"], sources=["table"]),
            turn("What is the total running time of all the movies?",
                 [("1,179 minutes", None)],
                 completed="What is the total running time of the Harry Potter movies?",
                 entities=["Q201"], sources=["info"]),
        ],
    },
    {
        "conv_id": "mov-matrix", "domain": "Movies",
        "turns": [
            turn("Who played Neo in The Matrix?",
                 [("Keanu Reeves", "Q213")],
                 entities=["Q211", "Q212"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("2 September 1964", None)],
                 completed="When was Keanu Reeves born?",
                 entities=["Q213"], sources=["kb"]),
            turn("Where was he born?",
                 [("Beirut", "Q214")],
                 completed="Where was Keanu Reeves born?",
                 entities=["Q213"], sources=["kb"]),
            turn("What year was The Matrix released?",
                 [("1999", None)],
                 entities=["Q211"], sources=["table"]),
            turn("Who directed it?",
                 [("The Wachowskis", "Q215")],
                 completed="Who directed The Matrix?",
                 entities=["Q211"], sources=["kb", "text"]),
        ],
    },
    {
        "conv_id": "mov-inception", "domain": "Movies",
        "turns": [
            turn("Who played Cobb in Inception?",
                 [("Leonardo DiCaprio", "Q223")],
                 entities=["Q221", "Q222"], sources=["kb", "text"]),
            turn("Where was he born?",
                 [("Los Angeles", "Q224")],
                 completed="Where was Leonardo DiCaprio born?",
                 entities=["Q223"], sources=["kb"]),
            turn("Who directed Inception?",
                 [("Christopher Nolan", "Q225")],
                 entities=["Q221"], sources=["kb", "text"]),
            turn("What year did Inception come out?",
                 [("2010", None)],
                 entities=["Q221"], sources=["info", "text"]),
            turn("What is the running time?",
                 [("148 minutes", None)],
                 completed="What is the running time of Inception?",
                 entities=["Q221"], sources=["info"]),
        ],
    },
    {
        "conv_id": "mov-titanic", "domain": "Movies",
        "turns": [
            turn("Who played Rose in Titanic?",
                 [("Kate Winslet", "Q233")],
                 entities=["Q231", "Q232"], sources=["kb", "text"]),
            turn("When was she born?",
                 [("5 October 1975", None)],
                 completed="When was Kate Winslet born?",
                 entities=["Q233"], sources=["kb"]),
            turn("Who directed Titanic?",
                 [("James Cameron", "Q234")],
                 entities=["Q231"], sources=["kb", "text"]),
            turn("How many academy awards did Titanic win?",
                 [("11", None)],
                 entities=["Q231"], sources=["info"]),
            turn("What year was it released?",
                 [("1997", None)],
                 completed="What year was Titanic released?",
                 entities=["Q231"], sources=["info", "text"]),
        ],
    },
    # --- Books ---
    {
        "conv_id": "book-s5", "domain": "Books",
        "turns": [
            turn("Who wrote Slaughterhouse-Five?",
                 [("Kurt Vonnegut", "Q302")],
                 entities=["Q301"], sources=["kb", "text"]),
            turn("Which war is discussed in the book?",
                 [("World War II", "Q303")],
                 completed="Which war is discussed in Slaughterhouse-Five?",
                 entities=["Q301"], sources=["kb", "text"]),
            turn("What year was Slaughterhouse-Five first published?",
                 [("1969", None)],
                 entities=["Q301"], sources=["info"]),
            turn("When was Kurt Vonnegut born?",
                 [("11 November 1922", None)],
                 entities=["Q302"], sources=["kb"]),
            turn("Where did he die?",
                 [("New York City", "Q304")],
                 completed="Where did Kurt Vonnegut die?",
                 entities=["Q302"], sources=["kb"]),
        ],
    },
    {
        "conv_id": "book-1984", "domain": "Books",
        "turns": [
            turn("Who wrote Nineteen Eighty-Four?",
                 [("George Orwell", "Q312")],
                 entities=["Q311"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("25 June 1903", None)],
                 completed="When was George Orwell born?",
                 entities=["Q312"], sources=["kb"]),
            turn("Where was he born?",
                 [("Motihari", "Q313")],
                 completed="Where was George Orwell born?",
                 entities=["Q312"], sources=["kb"]),
            turn("What year was 1984 published?",
                 [("1949", None)],
                 entities=["Q311"], sources=["info", "text"]),
            turn("What genre is it?",
                 [("Dystopian fiction", "Q314")],
                 completed="What genre is 1984?",
                 entities=["Q311"], sources=["kb"]),
        ],
    },
    {
        "conv_id": "book-dune", "domain": "Books",
        "turns": [
            turn("Who is the author of Dune?",
                 [("Frank Herbert", "Q322")],
                 entities=["Q321"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("8 October 1920", None)],
                 completed="When was Frank Herbert born?",
                 entities=["Q322"], sources=["kb"]),
            turn("When was Dune first published?",
                 [("August 1, 1965", None)],
                 entities=["Q321"], sources=["info"]),
            turn("Which planet is the story set on?",
                 [("Arrakis", "Q323")],
                 completed="Which planet is Dune set on?",
                 entities=["Q321"], sources=["kb", "text"]),
            turn("Who played Paul Atreides in the movie?",
                 [("Timothée Chalamet", "Q326")],
                 completed="Who played Paul Atreides in the Dune movie?",
                 entities=["Q321", "Q325"], sources=["kb", "text"]),
        ],
    },
    {
        "conv_id": "book-hobbit", "domain": "Books",
        "turns": [
            turn("Who wrote The Hobbit?",
                 [("J. R. R. Tolkien", "Q332")],
                 entities=["Q331"], sources=["kb", "text"]),
            turn("What year was The Hobbit published?",
                 [("1937", None)],
                 entities=["Q331"], sources=["info"]),
            turn("When was Tolkien born?",
                 [("3 January 1892", None)],
                 entities=["Q332"], sources=["kb"]),
            turn("Where did he die?",
                 [("Bournemouth", "Q333")],
                 completed="Where did Tolkien die?",
                 entities=["Q332"], sources=["kb"]),
            turn("Who played Bilbo in the movie?",
                 [("Martin Freeman", "Q335")],
                 completed="Who played Bilbo in The Hobbit movie?",
                 entities=["Q331", "Q334"], sources=["kb", "text"]),
        ],
    },
    # --- Music ---
    {
        "conv_id": "mus-beatles", "domain": "Music",
        "turns": [
            turn("What was the last album recorded by the Beatles?",
                 [("Let It Be", "Q402")],
                 entities=["Q401"], sources=["kb", "table"]),
            turn("Where did the Beatles play their last paying concert?",
                 [("Candlestick Park", "Q403")],
                 entities=["Q401"], sources=["text"]),
            turn("What year did the Beatles break up?",
                 [("1970", None)],
                 entities=["Q401"], sources=["kb"]),
            turn("Who was their manager?",
                 [("Brian Epstein", "Q404")],
                 completed="Who was the manager of the Beatles?",
                 entities=["Q401"], sources=["kb"]),
            turn("What was their nickname?",
                 [("Fab Four", "Q401")],
                 completed="What was the nickname of the Beatles?",
                 entities=["Q401"], sources=["text"]),
        ],
    },
    {
        "conv_id": "mus-queen", "domain": "Music",
        "turns": [
            turn("Who was the lead singer of Queen?",
                 [("Freddie Mercury", "Q412")],
                 entities=["Q411"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("5 September 1946", None)],
                 completed="When was Freddie Mercury born?",
                 entities=["Q412"], sources=["kb"]),
            turn("Where was he born?",
                 [("Zanzibar", "Q413")],
                 completed="Where was Freddie Mercury born?",
                 entities=["Q412"], sources=["kb"]),
            turn("What year did Queen release Bohemian Rhapsody?",
                 [("1975", None)],
                 entities=["Q411"], sources=["table"]),
            turn("How many studio albums do they have?",
                 [("15", None)],
                 completed="How many studio albums does Queen have?",
                 entities=["Q411"], sources=["info"]),
        ],
    },
    {
        "conv_id": "mus-abba", "domain": "Music",
        "turns": [
            turn("Which country is ABBA from?",
                 [("Sweden", "Q422")],
                 entities=["Q421"], sources=["kb", "info"]),
            turn("What year did ABBA win Eurovision?",
                 [("1974", None)],
                 entities=["Q421"], sources=["kb", "text"]),
            turn("What was the winning song?",
                 [("Waterloo", "Q423")],
                 completed="What was the winning song of ABBA at Eurovision?",
                 entities=["Q421"], sources=["kb", "text"]),
            turn("How many studio albums does ABBA have?",
                 [("8", None)],
                 entities=["Q421"], sources=["info"]),
            turn("What year did they split up?",
                 [("1982", None)],
                 completed="What year did ABBA split up?",
                 entities=["Q421"], sources=["kb"]),
        ],
    },
    {
        "conv_id": "mus-nirvana", "domain": "Music",
        "turns": [
            turn("Who was the lead singer of Nirvana?",
                 [("Kurt Cobain", "Q432")],
                 entities=["Q431"], sources=["kb", "text"]),
            turn("When was he born?",
                 [("20 February 1967", None)],
                 completed="When was Kurt Cobain born?",
                 entities=["Q432"], sources=["kb"]),
            turn("Where was Nirvana formed?",
                 [("Aberdeen", "Q433")],
                 entities=["Q431"], sources=["kb"]),
            turn("What year did Nirvana release Nevermind?",
                 [("1991", None)],
                 entities=["Q431"], sources=["table"]),
            turn("Who was the drummer?",
                 [("Dave Grohl", "Q434")],
                 completed="Who was the drummer of Nirvana?",
                 entities=["Q431"], sources=["kb", "text"]),
        ],
    },
    # --- Soccer ---
    {
        "conv_id": "soc-mbappe", "domain": "Soccer",
        "turns": [
            turn("Which national team does Kylian Mbappé play soccer for?",
                 [("France national football team", "Q502")],
                 entities=["Q501"], sources=["kb"]),
            turn("How many goals did Mbappé score in 2018?",
                 [("9", None)],
                 entities=["Q501"], sources=["table"]),
            turn("place of his birth?",
                 [("Paris", "Q503")],
                 completed="What is the place of birth of Mbappé?",
                 entities=["Q501"], sources=["kb", "text"]),
            turn("Which club does Mbappé play for?",
                 [("Paris Saint-Germain", "Q504")],
                 entities=["Q501"], sources=["kb"]),
            turn("Which award did Mbappé get in 2017?",
                 [("Golden Boy", "Q505")],
                 entities=["Q501"], sources=["kb", "text"]),
        ],
    },
    {
        "conv_id": "soc-messi", "domain": "Soccer",
        "turns": [
            turn("Which club does Lionel Messi play for?",
                 [("Inter Miami", "Q513")],
                 entities=["Q511"], sources=["kb", "text"]),
            turn("Where is that club based?",
                 [("Miami", "Q514")],
                 completed="Where is Inter Miami based?",
                 entities=["Q513"], sources=["kb"]),
            turn("When was Messi born?",
                 [("24 June 1987", None)],
                 entities=["Q511"], sources=["kb"]),
            turn("How many Ballon d'Or awards has he won?",
                 [("8", None)],
                 completed="How many Ballon d'Or awards has Messi won?",
                 entities=["Q511"], sources=["info"]),
            turn("Where was he born?",
                 [("Rosario", "Q515")],
                 completed="Where was Messi born?",
                 entities=["Q511"], sources=["kb", "text"]),
        ],
    },
    {
        "conv_id": "soc-ronaldo", "domain": "Soccer",
        "turns": [
            turn("Which country is Cristiano Ronaldo from?",
                 [("Portugal", "Q522")],
                 entities=["Q521"], sources=["kb", "text"]),
            turn("Which club did Ronaldo play for in 2010?",
                 [("Real Madrid", "Q523")],
                 entities=["Q521"], sources=["kb", "text"]),
            turn("Where is that club based?",
                 [("Madrid", "Q524")],
                 completed="Where is Real Madrid based?",
                 entities=["Q523"], sources=["kb"]),
            turn("When was Ronaldo born?",
                 [("5 February 1985", None)],
                 entities=["Q521"], sources=["kb"]),
            turn("How many goals did he score in 2015?",
                 [("57", None)],
                 completed="How many goals did Ronaldo score in 2015?",
                 entities=["Q521"], sources=["table"]),
        ],
    },
    {
        "conv_id": "soc-zidane", "domain": "Soccer",
        "turns": [
            turn("Which country did Zinedine Zidane play for?",
                 [("France", "Q532")],
                 entities=["Q531"], sources=["kb", "text"]),
            turn("Which club did Zidane coach?",
                 [("Real Madrid", "Q523")],
                 entities=["Q531"], sources=["kb"]),
            turn("When was Zidane born?",
                 [("23 June 1972", None)],
                 entities=["Q531"], sources=["kb"]),
            turn("Where was he born?",
                 [("Marseille", "Q533")],
                 completed="Where was Zidane born?",
                 entities=["Q531"], sources=["kb", "text"]),
            turn("How many World Cups did Zidane win?",
                 [("1", None)],
                 entities=["Q531"], sources=["info"]),
        ],
    },
]

# Conversations for the distant-supervision recovery check: the subject is
# named once in turn 0 and required for every follow-up. "slot" records where
# the labeler must place the planted mention.
PLANTED = [
    {
        "conv_id": "sup-got", "domain": "TV series", "planted": "GoT",
        "turns": [
            (turn("Who played Jaime Lannister in GoT?", [("Nikolaj Coster-Waldau", "Q104")],
                  entities=["Q101", "Q102"], sources=["kb", "text"]), None),
            (turn("When did the first season premiere?", [("April 17, 2011", None)],
                  entities=["Q101"], sources=["table"]), "question"),
            (turn("How many episodes are there?", [("73", None)],
                  entities=["Q101"], sources=["info"]), "question"),
            (turn("Who played the dwarf?", [("Peter Dinklage", "Q105")],
                  entities=["Q101", "Q103"], sources=["kb", "text"]), "context"),
            (turn("When did the second season premiere?", [("April 1, 2012", None)],
                  entities=["Q101"], sources=["table"]), "question"),
        ],
    },
    {
        "conv_id": "sup-twd", "domain": "TV series", "planted": "The Walking Dead",
        "turns": [
            (turn("Who is the actor of Rick Grimes in The Walking Dead?",
                  [("Andrew Lincoln", "Q114")],
                  entities=["Q111", "Q112"], sources=["kb", "text"]), None),
            (turn("When did the first season premiere?", [("October 31, 2010", None)],
                  entities=["Q111"], sources=["table"]), "question"),
            (turn("How many seasons are there?", [("11", None)],
                  entities=["Q111"], sources=["info"]), "question"),
            (turn("Who played Daryl Dixon?", [("Norman Reedus", "Q115")],
                  entities=["Q111", "Q113"], sources=["kb", "text"]), "context"),
            (turn("When did the second season premiere?", [("October 16, 2011", None)],
                  entities=["Q111"], sources=["table"]), "question"),
        ],
    },
    {
        "conv_id": "sup-bb", "domain": "TV series", "planted": "Breaking Bad",
        "turns": [
            (turn("Who played Walter White in Breaking Bad?", [("Bryan Cranston", "Q123")],
                  entities=["Q121", "Q122"], sources=["kb", "text"]), None),
            (turn("What year did the first season premiere?", [("2008", None)],
                  entities=["Q121"], sources=["table"]), "question"),
            (turn("How many episodes are there?", [("62", None)],
                  entities=["Q121"], sources=["info"]), "question"),
            (turn("Who played Jesse Pinkman?", [("Aaron Paul", "Q126")],
                  entities=["Q121", "Q125"], sources=["kb", "text"]), "context"),
            (turn("What year did the second season premiere?", [("2009", None)],
                  entities=["Q121"], sources=["table"]), "question"),
        ],
    },
    {
        "conv_id": "sup-friends", "domain": "TV series", "planted": "Friends",
        "turns": [
            (turn("Who played Rachel Green in Friends?", [("Jennifer Aniston", "Q133")],
                  entities=["Q131", "Q132"], sources=["kb", "text"]), None),
            (turn("When did the first season premiere?", [("September 22, 1994", None)],
                  entities=["Q131"], sources=["table"]), "question"),
            (turn("How many episodes are there?", [("236", None)],
                  entities=["Q131"], sources=["info"]), "question"),
            (turn("Who played Ross Geller?", [("David Schwimmer", "Q137")],
                  entities=["Q131", "Q136"], sources=["kb", "text"]), "context"),
            (turn("When did the second season premiere?", [("September 21, 1995", None)],
                  entities=["Q131"], sources=["table"]), "question"),
        ],
    },
    {
        "conv_id": "sup-hp", "domain": "Movies", "planted": "Harry Potter movies",
        "turns": [
            (turn("Who played Ron in the Harry Potter movies?", [("Rupert Grint", "Q203")],
                  entities=["Q201", "Q202"], sources=["kb", "text"]), None),
            (turn("What year did the first film come out?", [("2001", None)],
                  entities=["Q201"], sources=["table"]), "question"),
            (turn("What is the total running time?", [("1,179 minutes", None)],
                  entities=["Q201"], sources=["info"]), "question"),
            (turn("Who played Dumbledore?",
                  [("Richard Harris", "Q205"), ("Michael Gambon", "Q206")],
                  entities=["Q201", "Q204"], sources=["kb", "text"]), "context"),
            (turn("What year did the second film come out?", [("2002", None)],
                  entities=["Q201"], sources=["table"]), "question"),
        ],
    },
    {
        "conv_id": "sup-matrix", "domain": "Movies", "planted": "The Matrix",
        "turns": [
            (turn("Who played Neo in The Matrix?", [("Keanu Reeves", "Q213")],
                  entities=["Q211", "Q212"], sources=["kb", "text"]), None),
            (turn("What year did the first film come out?", [("1999", None)],
                  entities=["Q211"], sources=["table"]), "question"),
            (turn("What is the running time?", [("136 minutes", None)],
                  entities=["Q211"], sources=["info"]), "question"),
            (turn("Who played Trinity?", [("Carrie-Anne Moss", "Q217")],
                  entities=["Q211", "Q216"], sources=["kb", "text"]), "context"),
            (turn("What year did the second film come out?", [("2003", None)],
                  entities=["Q211"], sources=["table"]), "question"),
        ],
    },
    {
        "conv_id": "sup-beatles", "domain": "Music", "planted": "the Beatles",
        "turns": [
            (turn("What was the last album recorded by the Beatles?", [("Let It Be", "Q402")],
                  entities=["Q401"], sources=["kb", "table"]), None),
            (turn("What year did it come out?", [("1970", None)],
                  entities=["Q401"], sources=["table", "kb"]), "question"),
            (turn("Who was their manager?", [("Brian Epstein", "Q404")],
                  entities=["Q401"], sources=["kb"]), "question"),
            (turn("Where did they play their last paying concert?",
                  [("Candlestick Park", "Q403")],
                  entities=["Q401"], sources=["text"]), "question"),
            (turn("What year did they break up?", [("1970", None)],
                  entities=["Q401"], sources=["kb"]), "question"),
        ],
    },
    {
        "conv_id": "sup-queen", "domain": "Music", "planted": "Queen",
        "turns": [
            (turn("Who was the lead singer of Queen?", [("Freddie Mercury", "Q412")],
                  entities=["Q411"], sources=["kb", "text"]), None),
            (turn("What year did Bohemian Rhapsody come out?", [("1975", None)],
                  entities=["Q411"], sources=["table"]), "question"),
            (turn("How many studio albums do they have?", [("15", None)],
                  entities=["Q411"], sources=["info"]), "question"),
            (turn("What year did We Will Rock You come out?", [("1977", None)],
                  entities=["Q411"], sources=["table"]), "question"),
            (turn("Where was the band formed?", [("London", "Q414")],
                  entities=["Q411"], sources=["kb"]), "question"),
        ],
    },
    {
        "conv_id": "sup-1984", "domain": "Books", "planted": "1984",
        "turns": [
            (turn("Who wrote 1984?", [("George Orwell", "Q312")],
                  entities=["Q311"], sources=["kb", "text"]), None),
            (turn("What year was it published?", [("1949", None)],
                  entities=["Q311"], sources=["info", "text"]), "question"),
            (turn("What genre is it?", [("Dystopian fiction", "Q314")],
                  entities=["Q311"], sources=["kb"]), "question"),
            (turn("Who is the main character?", [("Winston Smith", "Q315")],
                  entities=["Q311"], sources=["kb", "text"]), "question"),
            (turn("Who rules the state in the novel?", [("Big Brother", "Q316")],
                  entities=["Q311"], sources=["text"]), "question"),
        ],
    },
    {
        "conv_id": "sup-dune", "domain": "Books", "planted": "Dune",
        "turns": [
            (turn("Who is the author of Dune?", [("Frank Herbert", "Q322")],
                  entities=["Q321"], sources=["kb", "text"]), None),
            (turn("When was it first published?", [("August 1, 1965", None)],
                  entities=["Q321"], sources=["info"]), "question"),
            (turn("Which planet is the story set on?", [("Arrakis", "Q323")],
                  entities=["Q321"], sources=["kb", "text"]), "question"),
            (turn("Who played Paul Atreides?", [("Timothée Chalamet", "Q326")],
                  entities=["Q321", "Q325"], sources=["kb", "text"]), "context"),
            (turn("How many pages does it have?", [("412", None)],
                  entities=["Q321"], sources=["info"]), "question"),
        ],
    },
]


def main():
    SNAPSHOT.mkdir(parents=True, exist_ok=True)

    def write(path, payload):
        path.write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n", "utf-8")
        print(f"wrote {path.relative_to(ROOT)}")

    write(SNAPSHOT / "entities.json", ENTITIES)
    write(SNAPSHOT / "facts.json", FACTS)
    write(SNAPSHOT / "pages.json", PAGES)
    write(SNAPSHOT / "links.json", LINKS)
    stopwords_src = ROOT / "src" / "hetconv" / "data" / "stopwords.txt"
    shutil.copyfile(stopwords_src, SNAPSHOT / "stopwords.txt")
    print(f"wrote {(SNAPSHOT / 'stopwords.txt').relative_to(ROOT)}")

    write(OUT / "convmix-mini.json", CONVERSATIONS)

    planted_payload = []
    expectations = []
    for conv in PLANTED:
        planted_payload.append(
            {
                "conv_id": conv["conv_id"],
                "domain": conv["domain"],
                "turns": [t for t, _slot in conv["turns"]],
            }
        )
        expectations.append(
            {
                "conv_id": conv["conv_id"],
                "planted": conv["planted"],
                "slots": [slot for _t, slot in conv["turns"]],
            }
        )
    write(OUT / "supervision-planted.json", planted_payload)
    write(OUT / "supervision-planted-expected.json", expectations)


if __name__ == "__main__":
    main()
