"""
并行调度测试
"""

from algebra import Status
from scheduler import TaskScheduler, VerifyTask, resolve_jobs


def test_resolve_jobs():
    assert resolve_jobs(3) == 3
    assert resolve_jobs(0) >= 1


def test_results_follow_submission_order():
    tasks = [
        VerifyTask("I10", caps={"n": 3}),
        VerifyTask("EULER-ODD", caps={"q": 20}),
        VerifyTask("CLOSING-SUM", caps={"n": 3}, mutation="add-q"),
    ]
    scheduler = TaskScheduler(jobs=2)
    scheduler.start()
    try:
        outcomes = scheduler.run(tasks)
    finally:
        scheduler.stop()
    assert [o.identity_id for o in outcomes] == ["I10", "EULER-ODD", "CLOSING-SUM"]
    assert [o.status for o in outcomes] == [Status.PASS, Status.PASS, Status.FAIL]
