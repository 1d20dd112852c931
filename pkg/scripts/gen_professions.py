#!/usr/bin/env python3
"""Regenerate the profession-word pattern resource of the german-ext pack.

Writes packs/german-ext/patterns/reProfessions.txt from the pair table
below: one masculine and one feminine form per profession, deduplicated
and sorted. Run from anywhere; paths are resolved relative to this file.
"""

from pathlib import Path

# (masculine, feminine) surface forms; feminine forms with umlaut or stem
# changes are spelled out rather than derived.
PAIRS = [
    ("Apotheker", "Apothekerin"),
    ("Architekt", "Architektin"),
    ("Arzt", "Ärztin"),
    ("Assistent", "Assistentin"),
    ("Autor", "Autorin"),
    ("Bäcker", "Bäckerin"),
    ("Bauer", "Bäuerin"),
    ("Beamter", "Beamtin"),
    ("Berater", "Beraterin"),
    ("Bibliothekar", "Bibliothekarin"),
    ("Bildhauer", "Bildhauerin"),
    ("Biologe", "Biologin"),
    ("Botschafter", "Botschafterin"),
    ("Buchhalter", "Buchhalterin"),
    ("Bürgermeister", "Bürgermeisterin"),
    ("Chemiker", "Chemikerin"),
    ("Chirurg", "Chirurgin"),
    ("Detektiv", "Detektivin"),
    ("Dichter", "Dichterin"),
    ("Diplomat", "Diplomatin"),
    ("Direktor", "Direktorin"),
    ("Dirigent", "Dirigentin"),
    ("Dolmetscher", "Dolmetscherin"),
    ("Dozent", "Dozentin"),
    ("Drucker", "Druckerin"),
    ("Elektriker", "Elektrikerin"),
    ("Erzieher", "Erzieherin"),
    ("Fahrer", "Fahrerin"),
    ("Fleischer", "Fleischerin"),
    ("Forscher", "Forscherin"),
    ("Fotograf", "Fotografin"),
    ("Friseur", "Friseurin"),
    ("Gärtner", "Gärtnerin"),
    ("Geiger", "Geigerin"),
    ("Geologe", "Geologin"),
    ("Händler", "Händlerin"),
    ("Hausmeister", "Hausmeisterin"),
    ("Historiker", "Historikerin"),
    ("Ingenieur", "Ingenieurin"),
    ("Journalist", "Journalistin"),
    ("Jurist", "Juristin"),
    ("Kapitän", "Kapitänin"),
    ("Kassierer", "Kassiererin"),
    ("Kaufmann", "Kauffrau"),
    ("Kellner", "Kellnerin"),
    ("Koch", "Köchin"),
    ("Komponist", "Komponistin"),
    ("Konditor", "Konditorin"),
    ("Kritiker", "Kritikerin"),
    ("Künstler", "Künstlerin"),
    ("Landwirt", "Landwirtin"),
    ("Lehrer", "Lehrerin"),
    ("Lektor", "Lektorin"),
    ("Maler", "Malerin"),
    ("Maurer", "Maurerin"),
    ("Mechaniker", "Mechanikerin"),
    ("Metzger", "Metzgerin"),
    ("Minister", "Ministerin"),
    ("Musiker", "Musikerin"),
    ("Notar", "Notarin"),
    ("Oberarzt", "Oberärztin"),
    ("Pfarrer", "Pfarrerin"),
    ("Pfleger", "Pflegerin"),
    ("Philosoph", "Philosophin"),
    ("Physiker", "Physikerin"),
    ("Pilot", "Pilotin"),
    ("Politiker", "Politikerin"),
    ("Polizist", "Polizistin"),
    ("Präsident", "Präsidentin"),
    ("Professor", "Professorin"),
    ("Prokurist", "Prokuristin"),
    ("Psychologe", "Psychologin"),
    ("Rechtsanwalt", "Rechtsanwältin"),
    ("Redakteur", "Redakteurin"),
    ("Regisseur", "Regisseurin"),
    ("Richter", "Richterin"),
    ("Sänger", "Sängerin"),
    ("Schaffner", "Schaffnerin"),
    ("Schauspieler", "Schauspielerin"),
    ("Schlosser", "Schlosserin"),
    ("Schmied", "Schmiedin"),
    ("Schneider", "Schneiderin"),
    ("Schreiner", "Schreinerin"),
    ("Schriftsteller", "Schriftstellerin"),
    ("Schuster", "Schusterin"),
    ("Sekretär", "Sekretärin"),
    ("Senator", "Senatorin"),
    ("Soldat", "Soldatin"),
    ("Sprecher", "Sprecherin"),
    ("Staatsanwalt", "Staatsanwältin"),
    ("Steuerberater", "Steuerberaterin"),
    ("Tänzer", "Tänzerin"),
    ("Tierarzt", "Tierärztin"),
    ("Tischler", "Tischlerin"),
    ("Trainer", "Trainerin"),
    ("Übersetzer", "Übersetzerin"),
    ("Verkäufer", "Verkäuferin"),
    ("Verleger", "Verlegerin"),
    ("Vermieter", "Vermieterin"),
    ("Verwalter", "Verwalterin"),
    ("Wissenschaftler", "Wissenschaftlerin"),
    ("Zahnarzt", "Zahnärztin"),
    ("Zöllner", "Zöllnerin"),
]

HEADER = "// Profession words that precede surnames; regenerate with " \
         "scripts/gen_professions.py\n"


def render():
    words = sorted({w for pair in PAIRS for w in pair})
    return HEADER + "\n".join(words) + "\n"


def main():
    target = (
        Path(__file__).resolve().parents[1]
        / "packs" / "german-ext" / "patterns" / "reProfessions.txt"
    )
    target.write_text(render(), encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
