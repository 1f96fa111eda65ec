"""Component registry, usage bookkeeping, RUL, and schedule compilation.

Registry document (JSON-shaped):

    {"components": [
        {"id": "screw_jack",
         "group": "Structural",
         "failure_modes": ["Gearbox damage/wear/corrosion", ...],
         "service_life": {"value": 5, "unit": "years"},
         "manufacturer_specified": true,
         "specifications": ["Max wind speed (during maintenance): 38 mph*"],
         "tasks": [
            {"description": "Inspect every 100 cycles or 5 years (whichever comes first)",
             "trigger": {"whichever_first": {"years": 5, "cycles": 100,
                                             "counter": "jack_cycles"}}},
            {"description": "Lubricate every 15 cycles or once a year",
             "trigger": {"cycle_interval": {"cycles": 15, "counter": "jack_cycles"}}}
         ]}
    ]}

Trigger tags are calendar_interval / cycle_interval / whichever_first /
event. A cycles-based service life names the usage counter it is measured
against. Calendar arithmetic is whole days with a 365-day year; recurring
intervals anchor to the install date.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from datetime import date, timedelta
from typing import Optional, Union

from .errors import ValidationError

DAYS_PER_YEAR = 365

GROUPS = ("Structural", "Electromechanical", "Control", "Fasteners")
EVENT_KINDS = ("high_load", "post_install_inspection")

YEARS = "years"
CYCLES = "cycles"

# schedule-entry reasons
INTERVAL_ELAPSED = "interval_elapsed"
CYCLES_ELAPSED = "cycles_elapsed"
EVENT = "event"
LIFE_EXPIRED = "life_expired"


# ---------------------------------------------------------------------------
# triggers and registry types


@dataclass(frozen=True)
class CalendarInterval:
    years: float

    def __post_init__(self):
        if not self.years > 0:
            raise ValidationError(f"calendar interval must be positive, got {self.years}")


@dataclass(frozen=True)
class CycleInterval:
    cycles: float
    counter: str

    def __post_init__(self):
        if not self.cycles > 0:
            raise ValidationError(f"cycle interval must be positive, got {self.cycles}")


@dataclass(frozen=True)
class WhicheverFirst:
    years: float
    cycles: float
    counter: str

    def __post_init__(self):
        if not self.years > 0 or not self.cycles > 0:
            raise ValidationError("whichever_first intervals must be positive")


@dataclass(frozen=True)
class EventTrigger:
    kind: str

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise ValidationError(
                f"event kind must be one of {EVENT_KINDS}, got {self.kind!r}"
            )


Trigger = Union[CalendarInterval, CycleInterval, WhicheverFirst, EventTrigger]


@dataclass(frozen=True)
class MaintenanceTask:
    description: str
    trigger: Trigger


@dataclass(frozen=True)
class ServiceLife:
    value: float
    unit: str  # "years" or "cycles"
    counter: Optional[str] = None  # required for cycles

    def __post_init__(self):
        if self.unit not in (YEARS, CYCLES):
            raise ValidationError(f"service life unit must be years or cycles, got {self.unit!r}")
        if not self.value > 0:
            raise ValidationError(f"service life must be positive, got {self.value}")
        if self.unit == CYCLES and not self.counter:
            raise ValidationError("cycles-based service life needs a counter id")


@dataclass(frozen=True)
class ComponentRecord:
    id: str
    group: str
    failure_modes: tuple[str, ...] = ()
    service_life: Optional[ServiceLife] = None
    manufacturer_specified: bool = False
    specifications: tuple[str, ...] = ()
    tasks: tuple[MaintenanceTask, ...] = ()

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValidationError(f"unknown group {self.group!r} (expected one of {GROUPS})")
        object.__setattr__(self, "failure_modes", tuple(self.failure_modes))
        object.__setattr__(self, "specifications", tuple(self.specifications))
        object.__setattr__(self, "tasks", tuple(self.tasks))


@dataclass(frozen=True)
class Registry:
    components: tuple[ComponentRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        seen = set()
        for c in self.components:
            if c.id in seen:
                raise ValidationError(f"duplicate component id {c.id!r}")
            seen.add(c.id)

    def get(self, component_id: str) -> ComponentRecord:
        for c in self.components:
            if c.id == component_id:
                return c
        raise ValidationError(f"no component {component_id!r} in registry")


@dataclass(frozen=True)
class UsageProfile:
    """Daily rates per cycle counter; a zero rate marks a log-driven counter."""

    counters: dict

    def __post_init__(self):
        for counter, rate in self.counters.items():
            if rate < 0:
                raise ValidationError(f"usage rate for {counter!r} must be >= 0, got {rate}")


@dataclass(frozen=True)
class InstallationRecord:
    install_date: date
    event_log: tuple = ()  # (date, kind) pairs
    cycle_log: dict = field(default_factory=dict)  # counter -> ((date, count), ...)

    def __post_init__(self):
        object.__setattr__(self, "event_log", tuple(self.event_log))
        object.__setattr__(
            self, "cycle_log", {k: tuple(v) for k, v in self.cycle_log.items()}
        )
        previous = self.install_date
        for when, kind in self.event_log:
            if when < previous:
                raise ValidationError("event log dates must be nondecreasing")
            if kind not in EVENT_KINDS:
                raise ValidationError(f"unknown event kind {kind!r}")
            previous = when
        for counter, entries in self.cycle_log.items():
            prev_date, prev_count = self.install_date, 0.0
            for when, count in entries:
                if when < prev_date or count < prev_count:
                    raise ValidationError(
                        f"cycle log for {counter!r} must be nondecreasing in date and count"
                    )
                prev_date, prev_count = when, count


@dataclass(frozen=True)
class ScheduleEntry:
    due_date: date
    component_id: str
    task: str
    reason: str
    due_count: Optional[float] = None  # cumulative counter threshold, cycle triggers only


@dataclass(frozen=True)
class RemainingLife:
    remaining: float
    unit: str
    fraction_consumed: float
    overconsumed: bool


# ---------------------------------------------------------------------------
# document parsing


def _context(msg: str, where: str) -> ValidationError:
    return ValidationError(f"{where}: {msg}")


def parse_trigger(doc: dict) -> Trigger:
    if not isinstance(doc, dict) or len(doc) != 1:
        raise ValidationError(f"trigger must be a single-key tagged object, got {doc!r}")
    tag, body = next(iter(doc.items()))
    if tag == "calendar_interval":
        return CalendarInterval(years=float(body["years"]))
    if tag == "cycle_interval":
        return CycleInterval(cycles=float(body["cycles"]), counter=str(body["counter"]))
    if tag == "whichever_first":
        return WhicheverFirst(
            years=float(body["years"]),
            cycles=float(body["cycles"]),
            counter=str(body["counter"]),
        )
    if tag == "event":
        return EventTrigger(kind=str(body["kind"]))
    raise ValidationError(f"unknown trigger tag {tag!r}")


def trigger_to_doc(trigger: Trigger) -> dict:
    if isinstance(trigger, CalendarInterval):
        return {"calendar_interval": {"years": trigger.years}}
    if isinstance(trigger, CycleInterval):
        return {"cycle_interval": {"cycles": trigger.cycles, "counter": trigger.counter}}
    if isinstance(trigger, WhicheverFirst):
        return {
            "whichever_first": {
                "years": trigger.years,
                "cycles": trigger.cycles,
                "counter": trigger.counter,
            }
        }
    return {"event": {"kind": trigger.kind}}


def load_registry(document: dict) -> Registry:
    """Validate a registry document; errors carry the offending row."""
    if "components" not in document:
        raise ValidationError("registry document must have a 'components' list")
    records = []
    for index, row in enumerate(document["components"]):
        where = f"component #{index} ({row.get('id', '?')!r})"
        try:
            life_doc = row.get("service_life")
            life = None
            if life_doc is not None:
                life = ServiceLife(
                    value=float(life_doc["value"]),
                    unit=str(life_doc["unit"]),
                    counter=life_doc.get("counter"),
                )
            tasks = tuple(
                MaintenanceTask(
                    description=str(t["description"]), trigger=parse_trigger(t["trigger"])
                )
                for t in row.get("tasks", ())
            )
            records.append(
                ComponentRecord(
                    id=str(row["id"]),
                    group=str(row["group"]),
                    failure_modes=tuple(row.get("failure_modes", ())),
                    service_life=life,
                    manufacturer_specified=bool(row.get("manufacturer_specified", False)),
                    specifications=tuple(row.get("specifications", ())),
                    tasks=tasks,
                )
            )
        except ValidationError as exc:
            raise _context(str(exc), where) from None
        except (KeyError, TypeError, ValueError) as exc:
            raise _context(f"malformed field: {exc}", where) from None
    return Registry(components=tuple(records))


def default_registry() -> Registry:
    from .default_registry import DEFAULT_REGISTRY_DOC

    return load_registry(DEFAULT_REGISTRY_DOC)


def usage_from_document(document: dict) -> UsageProfile:
    counters = document.get("counters", document)
    return UsageProfile(counters={str(k): float(v) for k, v in counters.items()})


def installation_from_document(document: dict) -> InstallationRecord:
    try:
        install = date.fromisoformat(document["install_date"])
        events = tuple(
            (date.fromisoformat(e["date"]), str(e["kind"]))
            for e in document.get("events", ())
        )
        cycles = {
            str(counter): tuple(
                (date.fromisoformat(e["date"]), float(e["count"])) for e in entries
            )
            for counter, entries in document.get("cycles", {}).items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed installation document: {exc}") from None
    return InstallationRecord(install_date=install, event_log=events, cycle_log=cycles)


# ---------------------------------------------------------------------------
# schedule compilation


def _years_to_days(years: float) -> int:
    return round(years * DAYS_PER_YEAR)


class _CounterModel:
    """Date at which a cumulative counter first reaches a threshold.

    Logged (date, count) points are authoritative; beyond the last log
    point the counter grows at the usage rate (zero rate: log-driven only).
    """

    def __init__(self, counter: str, install: InstallationRecord, usage: UsageProfile):
        known = counter in usage.counters or counter in install.cycle_log
        if not known:
            raise ValidationError(f"unknown cycle counter {counter!r}")
        self.log = install.cycle_log.get(counter, ())
        self.rate = usage.counters.get(counter, 0.0)
        if self.log:
            self.last_date, self.last_count = self.log[-1]
        else:
            self.last_date, self.last_count = install.install_date, 0.0

    def date_reaching(self, threshold: float) -> Optional[date]:
        for when, count in self.log:
            if count >= threshold:
                return when
        if self.rate > 0:
            days = math.ceil((threshold - self.last_count) / self.rate)
            return self.last_date + timedelta(days=max(days, 0))
        return None


def generate_schedule(
    registry: Registry,
    install: InstallationRecord,
    usage: UsageProfile,
    horizon_years: float,
) -> list[ScheduleEntry]:
    """Compile dated maintenance entries over the horizon.

    Calendar triggers recur from the install date; cycle triggers convert
    thresholds to dates through the counter model (entries also carry the
    threshold as due_count); whichever_first takes the earlier side at each
    recurrence, calendar winning ties; event triggers emit one entry per
    logged matching event; a lifed component gets a life_expired entry.
    Output is sorted by (due date, component id, task, reason).
    """
    if not horizon_years > 0:
        raise ValidationError(f"horizon must be positive, got {horizon_years}")
    start = install.install_date
    end = start + timedelta(days=_years_to_days(horizon_years))
    entries: list[ScheduleEntry] = []

    def within(d: Optional[date]) -> bool:
        return d is not None and start <= d <= end

    for component in registry.components:
        for task in component.tasks:
            trig = task.trigger
            if isinstance(trig, CalendarInterval):
                entries.extend(
                    ScheduleEntry(due, component.id, task.description, INTERVAL_ELAPSED)
                    for due in _calendar_recurrences(start, end, trig.years)
                )
            elif isinstance(trig, CycleInterval):
                model = _CounterModel(trig.counter, install, usage)
                k = 1
                while True:
                    due = model.date_reaching(k * trig.cycles)
                    if not within(due):
                        break
                    entries.append(
                        ScheduleEntry(
                            due, component.id, task.description, CYCLES_ELAPSED,
                            due_count=k * trig.cycles,
                        )
                    )
                    k += 1
            elif isinstance(trig, WhicheverFirst):
                model = _CounterModel(trig.counter, install, usage)
                k = 1
                while True:
                    cal_due = start + timedelta(days=_years_to_days(k * trig.years))
                    cyc_due = model.date_reaching(k * trig.cycles)
                    if cyc_due is None or cal_due <= cyc_due:
                        due, reason, count = cal_due, INTERVAL_ELAPSED, None
                    else:
                        due, reason, count = cyc_due, CYCLES_ELAPSED, k * trig.cycles
                    if not within(due):
                        break
                    entries.append(
                        ScheduleEntry(due, component.id, task.description, reason, count)
                    )
                    k += 1
            else:  # EventTrigger
                entries.extend(
                    ScheduleEntry(when, component.id, task.description, EVENT)
                    for when, kind in install.event_log
                    if kind == trig.kind and within(when)
                )
        life = component.service_life
        if life is not None:
            if life.unit == YEARS:
                due, count = start + timedelta(days=_years_to_days(life.value)), None
            else:
                model = _CounterModel(life.counter, install, usage)
                due, count = model.date_reaching(life.value), life.value
            if within(due):
                entries.append(
                    ScheduleEntry(
                        due, component.id,
                        f"Service life reached ({_life_text(life)})",
                        LIFE_EXPIRED, count,
                    )
                )

    entries.sort(key=lambda e: (e.due_date, e.component_id, e.task, e.reason))
    return entries


def _calendar_recurrences(start: date, end: date, interval_years: float):
    k = 1
    while True:
        due = start + timedelta(days=_years_to_days(k * interval_years))
        if due > end:
            return
        yield due
        k += 1


def remaining_service_life(
    component: ComponentRecord, usage: UsageProfile, elapsed_years: float
) -> RemainingLife:
    """Remaining life and consumed fraction after elapsed_years of service.

    Cycle-based lives consume at elapsed * 365 * daily rate of their
    counter. Overconsumption clamps the fraction to 1 and sets the flag.
    """
    if elapsed_years < 0:
        raise ValidationError(f"elapsed_years must be >= 0, got {elapsed_years}")
    life = component.service_life
    if life is None:
        raise ValidationError(f"component {component.id!r} is not lifed")
    if life.unit == YEARS:
        consumed = elapsed_years
    else:
        if life.counter not in usage.counters:
            raise ValidationError(
                f"component {component.id!r} lifed against unknown counter {life.counter!r}"
            )
        consumed = elapsed_years * DAYS_PER_YEAR * usage.counters[life.counter]
    fraction = consumed / life.value
    return RemainingLife(
        remaining=max(life.value - consumed, 0.0),
        unit=life.unit,
        fraction_consumed=min(fraction, 1.0),
        overconsumed=fraction > 1.0,
    )


# ---------------------------------------------------------------------------
# report emission

CSV = "csv"
MARKDOWN = "markdown"

_SCHEDULE_COLUMNS = ("due_date", "component_id", "task", "reason")
_REGISTRY_COLUMNS = (
    "Component",
    "Failure Modes",
    "Service Life",
    "Specifications",
    "Service Tasks",
)


def emit_report(payload, format: str) -> str:
    """Render a schedule (list of entries) or a Registry as CSV or Markdown.

    Output is byte-deterministic: same payload, same text.
    """
    if format not in (CSV, MARKDOWN):
        raise ValidationError(f"format must be 'csv' or 'markdown', got {format!r}")
    if isinstance(payload, Registry):
        rows = _registry_rows(payload)
        if format == CSV:
            return _csv_text(_REGISTRY_COLUMNS, [r for _, r in rows])
        return _registry_markdown(rows)
    entries = list(payload)
    table = [
        (e.due_date.isoformat(), e.component_id, e.task, e.reason) for e in entries
    ]
    if format == CSV:
        return _csv_text(_SCHEDULE_COLUMNS, table)
    return _markdown_table(_SCHEDULE_COLUMNS, table)


def _life_text(life: ServiceLife) -> str:
    unit = life.unit
    if life.value == 1 and unit == YEARS:
        unit = "year"
    return f"{life.value:g} {unit}"


def _service_life_cell(component: ComponentRecord) -> str:
    life = component.service_life
    if life is None:
        return "N/A"
    text = _life_text(life)
    if component.manufacturer_specified:
        text += "*"
    return text


def _registry_rows(registry: Registry) -> list[tuple[str, tuple]]:
    rows = []
    for c in registry.components:
        descriptions = []
        for task in c.tasks:
            if task.description not in descriptions:
                descriptions.append(task.description)
        rows.append(
            (
                c.group,
                (
                    c.id,
                    " / ".join(c.failure_modes),
                    _service_life_cell(c),
                    " / ".join(c.specifications) or "N/A",
                    " / ".join(descriptions),
                ),
            )
        )
    return rows


def _registry_markdown(rows: list[tuple[str, tuple]]) -> str:
    out = io.StringIO()
    out.write("# Component registry\n")
    for group in GROUPS:
        group_rows = [r for g, r in rows if g == group]
        if not group_rows:
            continue
        out.write(f"\n## {group}\n\n")
        out.write(_markdown_table(_REGISTRY_COLUMNS, group_rows))
    return out.getvalue()


def _markdown_table(columns, rows) -> str:
    def clean(cell: str) -> str:
        return str(cell).replace("|", "\\|")

    lines = [
        "| " + " | ".join(columns) + " |",
        "| " + " | ".join("---" for _ in columns) + " |",
    ]
    lines.extend("| " + " | ".join(clean(c) for c in row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def _csv_text(columns, rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out)  # RFC 4180 quoting and CRLF line ends
    writer.writerow(columns)
    writer.writerows(rows)
    return out.getvalue()
