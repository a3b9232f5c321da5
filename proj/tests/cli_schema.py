# Copyright 2026 The cmtorsion Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates the JSON output of the command line tool against schema/."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def run(cli, *args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {
        name: json.loads((schema_dir / f"{name}.schema.json").read_text())
        for name in ("report", "verify", "tables")
    }
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    cases = [
        ("report", ["classify", "--cm", "3", "--k", "16", "--format", "json"]),
        ("report", ["classify", "--curve", "0,1", "--format", "json", "--cross-check"]),
        ("report", ["classify", "--curve", "-15,22", "--format", "json"]),
        ("report", ["classify", "--cm", "7", "--k", "-7", "--format", "json", "--paranoid"]),
        ("report", ["classify", "--cm", "163", "--k", "1", "--format", "json"]),
        ("verify", ["verify", "--cm-list", "7,28", "--k-range", "-50,50", "--format", "json"]),
        ("verify", ["verify", "--cm-list", "3", "--k-range", "-1,1", "--format", "json"]),
        ("tables", ["tables", "--which", "1", "--format", "json"]),
        ("tables", ["tables", "--which", "2", "--format", "json"]),
    ]
    failures = 0
    for kind, args in cases:
        doc = run(cli, *args)
        errors = list(jsonschema.Draft202012Validator(schemas[kind]).iter_errors(doc))
        if json.loads(json.dumps(doc)) != doc:
            errors.append("round trip changed the document")
        status = "ok" if not errors else "FAIL"
        print(f"{status:4} {kind:6} {' '.join(args)}")
        for err in errors[:5]:
            print(f"     {getattr(err, 'message', err)}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
