"""JSON schemas for every machine-readable output of the CLI."""

SPAN = {
    "type": "object",
    "required": ["line", "col", "end_line", "end_col"],
    "properties": {k: {"type": "integer", "minimum": 0} for k in ("line", "col", "end_line", "end_col")},
    "additionalProperties": False,
}

DIAGNOSTIC = {
    "type": "object",
    "required": ["code", "message", "spans"],
    "properties": {
        "code": {"type": "string"},
        "message": {"type": "string"},
        "spans": {"type": "array", "items": SPAN},
    },
    "additionalProperties": False,
}

CHECK = {
    "type": "object",
    "required": ["ok", "procs", "diagnostics"],
    "properties": {
        "ok": {"type": "boolean"},
        "procs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "diagnostics"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["accepted", "rejected"]},
                    "diagnostics": {"type": "array", "items": DIAGNOSTIC},
                },
                "additionalProperties": False,
            },
        },
        "diagnostics": {"type": "array", "items": DIAGNOSTIC},
    },
    "additionalProperties": False,
}

VALUE = {"type": ["integer", "boolean", "string"]}

RUN = {
    "type": "object",
    "required": ["status", "steps", "output"],
    "properties": {
        "status": {"enum": ["finished", "deadlock", "limit"]},
        "steps": {"type": "integer", "minimum": 0},
        "output": {"type": "array", "items": VALUE},
        "blocked": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["instance", "proc", "op"],
                "properties": {
                    "instance": {"type": "integer"},
                    "proc": {"type": "string"},
                    "op": {"type": "string"},
                    "channel": {"type": "string"},
                    "channel_id": {"type": "string"},
                    "protocol": {"type": "string"},
                    "polarity": {"enum": ["in", "out"]},
                },
            },
        },
    },
    "additionalProperties": False,
}

TRACE = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["step", "instance", "op"],
        "properties": {
            "step": {"type": "integer", "minimum": 1},
            "instance": {"type": "integer", "minimum": 0},
            "op": {"type": "string"},
            "channel": {"type": "string"},
            "value": VALUE,
        },
        "additionalProperties": False,
    },
}

LAW_REPORT = {
    "$id": "law_report",
    "type": "object",
    "required": ["law", "instance", "cases", "status"],
    "properties": {
        "law": {"type": "string"},
        "instance": {"type": "string"},
        "cases": {"type": "integer", "minimum": 0},
        "status": {"enum": ["pass", "fail", "error"]},
        "counterexample": {"type": "object"},
        "note": {"type": "string"},
        "parts": {"type": "array", "items": {"$ref": "law_report"}},
    },
    "additionalProperties": False,
}

LAWS = {
    "type": "object",
    "required": ["ok", "reports"],
    "properties": {
        "ok": {"type": "boolean"},
        "reports": {"type": "array", "items": LAW_REPORT},
    },
    "additionalProperties": False,
}
