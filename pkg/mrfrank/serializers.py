from rest_framework import serializers

from mrfrank.models import MODES, HyperParams


class HyperParamsSerializer(serializers.Serializer):
    """
    HyperParams serializer

    Raises:
        ValidationError: if a coefficient is outside [0, 1], a decay rate is
            negative, u or max_iterations is below 1, the tolerance is not
            positive or the mode is unknown
    """
    alpha_p = serializers.FloatField(min_value=0, max_value=1)
    beta_p = serializers.FloatField(min_value=0, max_value=1)
    alpha_a = serializers.FloatField(min_value=0, max_value=1)
    beta_a = serializers.FloatField(min_value=0, max_value=1)
    alpha_f = serializers.FloatField(min_value=0, max_value=1)
    rho_edge = serializers.FloatField(min_value=0)
    rho_feature = serializers.FloatField(min_value=0)
    u = serializers.IntegerField(min_value=1)
    tolerance = serializers.FloatField()
    max_iterations = serializers.IntegerField(min_value=1)
    mode = serializers.ChoiceField(choices=MODES)

    def validate_tolerance(self, value):
        if not value > 0:
            raise serializers.ValidationError("tolerance must be positive")
        return value

    def to_internal_value(self, data):
        if isinstance(data, dict) and isinstance(data.get("mode"), str):
            data = {**data, "mode": data["mode"].replace("-", "_")}
        return super().to_internal_value(data)

    def create(self, validated_data):
        return HyperParams(**validated_data)
