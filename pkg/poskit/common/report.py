# ----------------------------------------------------------------------------------------------------------------------
#  Copyright (c) 2026, The Poskit Authors. All rights reserved.                                                        -
#  ---------------------------------------------------------------------------------------------------------------------
#  Licensed under CC BY-NC-SA 4.0.                                                                                     -
#  You can use and adapt materials for non-commercial purposes as long as giving                                       -
#  appropriate credit by citing the authors. If you adapt the materials, you must                                      -
#  distribute your contributions under the same license as the original.                                               -
# ----------------------------------------------------------------------------------------------------------------------
import logging
from dataclasses import dataclass
from poskit.common.common import Common
from poskit.common import generic


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """
    One violated invariant: which check, on which object and what was found.
    """
    check: str
    subject: str
    detail: str

    def to_json(self) -> dict:
        return {'check': self.check, 'subject': self.subject, 'detail': self.detail}

    def __str__(self):
        return '[%s] %s: %s' % (self.check, self.subject, self.detail)


class ValidationReport(Common):
    """
    Collects every violated invariant of an object instead of stopping at the first one.
    ---------
    @author:    Poskit Authors.
    @created:   4th October, 2026.
    """
    def __init__(self, subject, checks=None):
        """
        Class constructor.
        :param subject: name of validated object.
        :param checks:  names of checks that were run.
        """
        self.subject = subject
        self.checks = list(checks) if checks else list()
        self.violations = list()
        self.notes = list()

    def run(self, check):
        """
        Record that a check was run.
        :param check:   name of check.
        :return:        report itself as facade pattern.
        """
        if check not in self.checks:
            self.checks.append(check)
        return self

    def add(self, check, subject, detail):
        """
        Record a violation.
        :param check:   name of violated check.
        :param subject: offending part, e.g. a cone or a ray.
        :param detail:  what was found.
        :return:        report itself as facade pattern.
        """
        self.run(check)
        self.violations.append(Violation(check, str(subject), detail))
        return self

    def note(self, text):
        """
        Attach an informational note, e.g. that a check is a proxy.
        :param text:    note.
        :return:        report itself as facade pattern.
        """
        self.notes.append(text)
        return self

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed(self, check) -> bool:
        """
        Whether a given check has violations.
        :param check:   name of check.
        :return:        true or false.
        """
        return any(v.check == check for v in self.violations)

    def raise_for_violations(self):
        """
        Turn a failing report into a single input error listing all violations.
        :return:        report itself when passed.
        """
        if not self.passed:
            logger.debug('validation of %s failed with %d violation(s)', self.subject, len(self.violations))
            raise self.input_error('%s is invalid: %s.' % (
                self.subject, generic.content([str(v) for v in self.violations], separator='; ', end='; ')))
        return self

    def to_json(self) -> dict:
        return {
            'subject': self.subject,
            'passed': self.passed,
            'checks': list(self.checks),
            'violations': [v.to_json() for v in self.violations],
            'notes': list(self.notes),
        }

    def __str__(self):
        lines = ['%s: %s' % (self.subject, 'pass' if self.passed else 'fail')]
        lines += ['  %s' % v for v in self.violations]
        lines += ['  note: %s' % n for n in self.notes]
        return '\n'.join(lines)
