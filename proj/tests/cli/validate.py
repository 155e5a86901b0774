import json
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed, skipping", file=sys.stderr)
    sys.exit(0)

with open(sys.argv[1]) as f:
    schema = json.load(f)
with open(sys.argv[2]) as f:
    report = json.load(f)
jsonschema.validate(report, schema)
