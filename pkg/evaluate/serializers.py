from rest_framework import serializers

from evaluate.models import AUTHOR, PAPER, ReportRow


class ReportRowSerializer(serializers.Serializer):
    """
    One RI@k value of report.json
    """
    year = serializers.IntegerField()
    method = serializers.CharField()
    entity = serializers.ChoiceField(choices=(PAPER, AUTHOR))
    k = serializers.IntegerField(min_value=1)
    ri = serializers.FloatField(min_value=0)

    def create(self, validated_data):
        return ReportRow(**validated_data)


class ReportSerializer(serializers.Serializer):
    """
    report.json: protocol settings, the methods evaluated and the rows
    """
    cutoff_year = serializers.IntegerField()
    horizon_year = serializers.IntegerField()
    cohort_years = serializers.ListField(child=serializers.IntegerField())
    ks = serializers.ListField(child=serializers.IntegerField(min_value=1))
    methods = serializers.ListField(child=serializers.CharField())
    rows = ReportRowSerializer(many=True)
