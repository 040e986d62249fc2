"""Structure-oriented (SURE) evaluation: goal structures, questionnaires,
response ingestion, four-level scoring and reports."""

from ._core import (
    AggregateScores,
    Confirmation,
    GoalStructure,
    KeyGoal,
    MissingPolicy,
    ParticipantRecord,
    ParticipantScore,
    Participation,
    Question,
    Questionnaire,
    QuestionnaireFormat,
    ReportFormat,
    ResponseSet,
    Scale,
    ScaleLevel,
    ScoreReport,
    ScoreResult,
    Status,
    SubGoal,
    SureError,
    Violation,
    build_report,
    confirm_questionnaire,
    confirm_structure,
    decode_structure,
    default_scale,
    format_percent,
    format_score,
    generate_template,
    key_goal_score,
    make_participation,
    normalize,
    parse_questionnaire,
    parse_report_json,
    parse_responses,
    parse_structure,
    participant_score,
    render_questionnaire,
    render_report,
    run_cli,
    score_all,
    serialize_questionnaire,
    serialize_structure,
    simulate_responses,
    sub_goal_score,
    validate_questionnaire,
    validate_structure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
