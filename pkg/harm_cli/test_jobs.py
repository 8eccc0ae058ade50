from unittest import TestCase

from groups.groups import GroupSpec
from harm_cli.jobs import JobKey, ResultRecord
from harmonics.engine import ENGINE_VERSION, ComponentJob
from symfunc.partitions import Partition


class JobKeyTest(TestCase):
    def test_canonical_form_sorts_the_multidegree(self):
        key = JobKey(1, 1, 3, 2, 'polarized', (1, 2))
        self.assertEqual(key.canonical(), f'hilbert:G(1,1,3):r=2:polarized:d=2,1:{ENGINE_VERSION}')
        self.assertEqual(key.canonical(), JobKey(1, 1, 3, 2, 'polarized', (2, 1)).canonical())


    def test_version_is_part_of_the_key(self):
        old = JobKey(1, 1, 3, 2, 'polarized', (2, 1), version='harm-0')
        self.assertNotEqual(old.canonical(), JobKey(1, 1, 3, 2, 'polarized', (2, 1)).canonical())


    def test_policy_and_kind_are_part_of_the_key(self):
        keys = {JobKey(1, 1, 3, 2, 'polarized', (1, 1)).canonical(),
                JobKey(1, 1, 3, 2, 'reynolds', (1, 1)).canonical(),
                JobKey(1, 1, 3, 2, 'polarized', (1, 1), 'frobenius').canonical()}
        self.assertEqual(len(keys), 3)


    def test_from_job(self):
        job = ComponentJob(GroupSpec(4, 4, 2), 2, 'reynolds', (3, 0))
        key = JobKey.from_job(job)
        self.assertEqual(key, JobKey(4, 4, 2, 2, 'reynolds', (3, 0)))
        self.assertEqual(key.group, GroupSpec(4, 4, 2))


class ResultRecordTest(TestCase):
    def test_negative_dimension_fails_verification(self):
        with self.assertRaises(ValueError):
            ResultRecord(JobKey(1, 1, 2, 1, 'polarized', (1,)), -1).verify()


    def test_non_integral_dimension_fails_verification(self):
        with self.assertRaises(ValueError):
            ResultRecord(JobKey(1, 1, 2, 1, 'polarized', (1,)), 1.5).verify()


    def test_frobenius_payload(self):
        key = JobKey(1, 1, 3, 2, 'polarized', (1, 0), 'frobenius')
        record = ResultRecord(key, {Partition((2, 1)): 1}, {'seconds': 0.01})
        data = record.as_json()
        self.assertEqual(data['payload'], {'2,1': 1})
        self.assertEqual(ResultRecord.from_json(key, data).payload, {Partition((2, 1)): 1})


    def test_record_for_another_key_is_rejected(self):
        data = ResultRecord(JobKey(1, 1, 3, 2, 'polarized', (1, 0)), 2).as_json()
        with self.assertRaises(ValueError):
            ResultRecord.from_json(JobKey(1, 1, 3, 2, 'polarized', (1, 1)), data)


    def test_bad_payload_is_rejected_on_load(self):
        key = JobKey(1, 1, 3, 2, 'polarized', (1, 0))
        with self.assertRaises(ValueError):
            ResultRecord.from_json(key, {'key': key.canonical(), 'payload': -4, 'stats': {}})
