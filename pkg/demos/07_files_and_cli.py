"""File formats and the command line.

Run: python demos/07_files_and_cli.py
"""
import tempfile
from pathlib import Path

from polarities import Polarity, Relation, identity, parse_burmeister, serialize_burmeister, serialize_json_context, serialize_morphism
from polarities.cli import main

B = Polarity(Relation.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)]), ("b0", "b1"), ("beta0", "beta1"))

text = serialize_burmeister(B, "example")
print(text, end="")
print("round trip:", serialize_burmeister(parse_burmeister(text), "example") == text)
print(serialize_json_context(B), end="")

with tempfile.TemporaryDirectory() as tmp:
    ctx = Path(tmp) / "b.cxt"
    ctx.write_text(text, encoding="utf-8")
    mor = Path(tmp) / "id.json"
    mor.write_text(serialize_morphism(identity(B)), encoding="utf-8")
    for argv in (["lattice", ctx], ["check", mor], ["--json", "mono", mor], ["to-lattice", ctx, "--dot"], ["verify", "--seed", "42", "--cases", "20"]):
        argv = [str(a) for a in argv]
        print("$ polarity", " ".join(argv))
        code = main(argv)
        print(f"(exit {code})")
